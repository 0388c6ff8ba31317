//! Error types shared across the crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Shape or dimension mismatch, carrying the offending axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimError {
    pub context: &'static str,
    pub shape: Vec<usize>,
    pub got: usize,
}

impl DimError {
    pub fn new(context: &'static str, shape: &[usize], got: usize) -> Self {
        Self {
            context,
            shape: shape.to_vec(),
            got,
        }
    }
}

impl fmt::Display for DimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dimension error in {}: shape {:?} (got {})",
            self.context, self.shape, self.got
        )
    }
}

/// Configuration that violates a structural precondition.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigError {
    pub message: String,
}

impl ConfigError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "configuration error: {}", self.message)
    }
}

/// Numeric failure during training, identifying where it happened.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainError {
    pub message: String,
}

impl TrainError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}

impl fmt::Display for TrainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "training error: {}", self.message)
    }
}

#[cfg(feature = "std")]
mod std_impls {
    use super::*;
    impl std::error::Error for DimError {}
    impl std::error::Error for ConfigError {}
    impl std::error::Error for TrainError {}
}
