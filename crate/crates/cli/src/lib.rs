//! Batch orchestration behind the `fanoscope` command line: input
//! detection, decomposition choices, database sweeps and table replays.

pub mod batch;
pub mod input;

use fanoscope::Error;

/// Process exit code for an error: 2 for parse and I/O failures, 1 for
/// everything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::Io(_) => 2,
        _ => 1,
    }
}

/// The machine-readable error line written to stderr.
pub fn error_json(e: &Error) -> String {
    serde_json::json!({ "error": e.kind(), "message": e.to_string() }).to_string()
}
