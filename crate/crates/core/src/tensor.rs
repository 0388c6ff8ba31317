//! Dense 64-bit float tensors with an attached gradient slot.
//!
//! A [`Tensor`] is a plain value type: row-major data plus shape. During a
//! forward pass it is registered on a [`crate::tape::Tape`], which hands back
//! a node id; the id is mirrored into [`Tensor::tape_id`] so callers can pull
//! gradients back out after `backward`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::DimError;
use crate::tape::TensorId;

/// Dense n-dimensional array of `f64` in row-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    pub shape: Vec<usize>,
    pub data: Vec<f64>,
    /// Accumulated gradient, same length as `data` when present.
    pub grad: Option<Vec<f64>>,
    /// Node handle from the most recent registration on a tape.
    pub tape_id: Option<TensorId>,
}

impl Tensor {
    pub fn new(shape: &[usize], data: Vec<f64>) -> Result<Self, DimError> {
        let numel: usize = shape.iter().product();
        if numel != data.len() || shape.iter().any(|&e| e == 0) {
            return Err(DimError::new("tensor", shape, data.len()));
        }
        Ok(Self {
            shape: shape.to_vec(),
            data,
            grad: None,
            tape_id: None,
        })
    }

    pub fn zeros(shape: &[usize]) -> Self {
        let numel: usize = shape.iter().product();
        Self {
            shape: shape.to_vec(),
            data: vec![0.0; numel],
            grad: None,
            tape_id: None,
        }
    }

    pub fn scalar(v: f64) -> Self {
        Self {
            shape: vec![1],
            data: vec![v],
            grad: None,
            tape_id: None,
        }
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    pub fn is_scalar(&self) -> bool {
        self.data.len() == 1
    }

    /// Ensures the gradient slot exists and adds `g` into it.
    pub fn accumulate_grad(&mut self, g: &[f64]) {
        debug_assert_eq!(g.len(), self.data.len());
        let grad = self.grad.get_or_insert_with(|| vec![0.0; self.data.len()]);
        for (dst, src) in grad.iter_mut().zip(g) {
            *dst += src;
        }
    }

    pub fn zero_grad(&mut self) {
        if let Some(g) = &mut self.grad {
            g.iter_mut().for_each(|v| *v = 0.0);
        }
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

/// Shape of a channel-height-width feature map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chw {
    pub c: usize,
    pub h: usize,
    pub w: usize,
}

impl Chw {
    pub fn numel(self) -> usize {
        self.c * self.h * self.w
    }

    pub fn dims(self) -> [usize; 3] {
        [self.c, self.h, self.w]
    }
}

/// Interprets a tensor shape as `[C, H, W]`.
pub fn as_chw(shape: &[usize]) -> Result<Chw, DimError> {
    match shape {
        [c, h, w] => Ok(Chw {
            c: *c,
            h: *h,
            w: *w,
        }),
        _ => Err(DimError::new("expected [C,H,W]", shape, 0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_rejects_mismatched_length() {
        assert!(Tensor::new(&[2, 3], vec![0.0; 5]).is_err());
        assert!(Tensor::new(&[2, 0], vec![]).is_err());
        assert!(Tensor::new(&[2, 3], vec![0.0; 6]).is_ok());
    }

    #[test]
    fn grad_accumulates_across_calls() {
        let mut t = Tensor::zeros(&[3]);
        t.accumulate_grad(&[1.0, 2.0, 3.0]);
        t.accumulate_grad(&[1.0, 1.0, 1.0]);
        assert_eq!(t.grad.as_deref(), Some(&[2.0, 3.0, 4.0][..]));
        t.zero_grad();
        assert_eq!(t.grad.as_deref(), Some(&[0.0, 0.0, 0.0][..]));
    }
}
