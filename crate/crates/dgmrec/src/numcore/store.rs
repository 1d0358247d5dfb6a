//! Named parameter tensors with paired gradient buffers.

use super::Mat;
use crate::{DgError, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParamId(pub(crate) usize);

impl ParamId {
    pub fn index(&self) -> usize {
        self.0
    }
}

/// One learnable tensor. Shape is fixed at creation; `grads` always mirrors
/// the value shape.
#[derive(Debug, Clone)]
pub struct ParamTensor {
    pub name: String,
    pub values: Mat,
    pub grads: Mat,
}

#[derive(Debug, Clone, Default)]
pub struct ParamStore {
    tensors: Vec<ParamTensor>,
    by_name: BTreeMap<String, ParamId>,
}

impl ParamStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, name: impl Into<String>, values: Mat) -> ParamId {
        let name = name.into();
        assert!(
            !self.by_name.contains_key(&name),
            "duplicate parameter name {name}"
        );
        let id = ParamId(self.tensors.len());
        let (r, c) = values.shape();
        self.tensors.push(ParamTensor {
            name: name.clone(),
            values,
            grads: Mat::zeros(r, c),
        });
        self.by_name.insert(name, id);
        id
    }

    pub fn len(&self) -> usize {
        self.tensors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tensors.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ParamId> + '_ {
        (0..self.tensors.len()).map(ParamId)
    }

    pub fn lookup(&self, name: &str) -> Option<ParamId> {
        self.by_name.get(name).copied()
    }

    pub fn tensor(&self, id: ParamId) -> &ParamTensor {
        &self.tensors[id.0]
    }

    pub fn tensor_mut(&mut self, id: ParamId) -> &mut ParamTensor {
        &mut self.tensors[id.0]
    }

    pub fn values(&self, id: ParamId) -> &Mat {
        &self.tensors[id.0].values
    }

    pub fn grads(&self, id: ParamId) -> &Mat {
        &self.tensors[id.0].grads
    }

    pub fn accumulate_grad(&mut self, id: ParamId, delta: &Mat) {
        self.tensors[id.0].grads.add_assign(delta);
    }

    pub fn zero_grads(&mut self) {
        for t in self.tensors.iter_mut() {
            t.grads.data_mut().fill(0.0);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (ParamId, &ParamTensor)> {
        self.tensors.iter().enumerate().map(|(i, t)| (ParamId(i), t))
    }

    /// Every value and gradient entry is finite.
    pub fn all_finite(&self) -> bool {
        self.tensors
            .iter()
            .all(|t| t.values.is_finite() && t.grads.is_finite())
    }

    /// Snapshot of all parameter values (used for best-epoch checkpointing).
    pub fn snapshot(&self) -> Vec<Mat> {
        self.tensors.iter().map(|t| t.values.clone()).collect()
    }

    pub fn restore(&mut self, snap: &[Mat]) -> Result<()> {
        if snap.len() != self.tensors.len() {
            return Err(DgError::data("parameter snapshot length mismatch"));
        }
        for (t, s) in self.tensors.iter_mut().zip(snap.iter()) {
            if t.values.shape() != s.shape() {
                return Err(DgError::data(format!(
                    "snapshot shape mismatch for {}",
                    t.name
                )));
            }
            t.values = s.clone();
        }
        Ok(())
    }
}
