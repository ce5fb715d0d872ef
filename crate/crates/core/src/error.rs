use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph6 input; `offset` is the byte position of the problem.
    Parse { offset: usize, reason: &'static str },
    /// An exact search was asked to go beyond its configured cap.
    Size {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    /// A search ran out of nodes before it could give an exact answer.
    Budget { what: &'static str, nodes: u64 },
    /// The arguments are outside the mathematical domain of the operation.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { offset, reason } => {
                write!(f, "graph6 parse error at byte {offset}: {reason}")
            }
            Error::Size { what, value, cap } => {
                write!(f, "{what} is {value}, above the cap of {cap}")
            }
            Error::Budget { what, nodes } => {
                write!(f, "{what}: budget exhausted after {nodes} search nodes")
            }
            Error::Domain(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
