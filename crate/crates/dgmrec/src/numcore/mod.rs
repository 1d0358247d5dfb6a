//! Minimal differentiable compute layer.
//!
//! Parameters live in a [`ParamStore`]; forward passes are recorded on a
//! [`Tape`] of dense ops with hand-derived backward rules. Everything is
//! computed in f64 so that central finite differences resolve gradients to
//! better than 1e-4 relative error; checkpoints store f32 payloads.

mod checkpoint;
mod gradcheck;
mod mat;
mod optim;
mod sparse;
mod store;
mod tape;

pub use checkpoint::{load_checkpoint, save_checkpoint};
pub use gradcheck::{grad_check, GradCheckOptions};
pub use mat::Mat;
pub use optim::AdamState;
pub use sparse::CsMat;
pub use store::{ParamId, ParamStore, ParamTensor};
pub use tape::{BprForm, MlpSpec, NodeId, Tape};

/// Slope used by every hidden-layer leaky rectifier in the crate.
pub const LEAKY_SLOPE: f64 = 0.2;

/// Log-variance clamp range for variational heads.
pub const LOGVAR_MIN: f64 = -8.0;
pub const LOGVAR_MAX: f64 = 8.0;
