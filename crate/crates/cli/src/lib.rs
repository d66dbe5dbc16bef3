//! Command implementations behind the `ccs` binary, exposed as a library so
//! the integration and acceptance suites can call them directly.

pub mod oracle;
pub mod report;
pub mod scan;
pub mod spec;
pub mod verify;
