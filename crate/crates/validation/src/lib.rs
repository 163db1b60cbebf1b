//! Acceptance checks live in tests/acceptance.rs.
