//! Library surface of the verification harness: the example catalogue,
//! the named checks, the analysis pipeline, and the report types. The
//! `symmetroid` binary is a thin argument-parsing layer over these
//! modules, and the integration tests drive them directly.

pub mod analyze;
pub mod checks;
pub mod registry;
pub mod report;
