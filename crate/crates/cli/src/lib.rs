//! Library half of the command-line tool: the verification harness and its
//! reports, shared by the binary and the acceptance test suite.

pub mod report;
pub mod suites;
