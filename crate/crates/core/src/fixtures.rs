//! Loader for the named instances shipped in the repository's `fixtures/`
//! directory (used heavily by tests and handy on the CLI).

use std::path::PathBuf;

use crate::semiring::FiniteSemiring;

/// Repository `fixtures/` directory.
pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// Loads `fixtures/<name>.sr`, panicking with a readable message on failure.
pub fn load(name: &str) -> FiniteSemiring {
    let path = fixtures_dir().join(format!("{name}.sr"));
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    crate::io::parse_semiring(&text)
        .unwrap_or_else(|e| panic!("fixture {} is invalid: {e}", path.display()))
}
