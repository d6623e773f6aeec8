//! Layer-cake representation and the triangle/square decomposition.
//!
//! Along an ordering `i_1, i_2, ...` with values `v_1 >= v_2 >= ...`, the
//! function is `sum_r a_r 1{i_1..i_r}` with `a_r = v_r - v_{r+1}`. Odd-size
//! layers sum to the triangle-regular part, even-size layers to the
//! square-regular part.

use num_traits::Zero;

use crate::mass::{Mass, NonnegFn};
use crate::rearrange::{canonical_ordering, OrderedIndexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer {
    pub coefficient: Mass,
    /// The layer is the indicator of the first `size` indices of the ordering.
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerCake {
    ordering: OrderedIndexSet,
    layers: Vec<Layer>,
}

impl LayerCake {
    pub fn ordering(&self) -> &OrderedIndexSet {
        &self.ordering
    }

    /// Layers with positive coefficient, by increasing size.
    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn set(&self, layer: &Layer) -> &[i64] {
        &self.ordering.indices()[..layer.size]
    }

    /// `sum a_r 1_{A_r}` over the layers selected by `keep(size)`.
    pub fn sum_where(&self, keep: impl Fn(usize) -> bool) -> NonnegFn {
        let idx = self.ordering.indices();
        let mut acc = vec![Mass::zero(); idx.len()];
        for layer in self.layers.iter().filter(|l| keep(l.size)) {
            for slot in &mut acc[..layer.size] {
                *slot += &layer.coefficient;
            }
        }
        NonnegFn::from_parts(self.ordering.domain(), idx.iter().copied().zip(acc))
    }

    pub fn reconstruct(&self) -> NonnegFn {
        self.sum_where(|_| true)
    }
}

pub fn layer_cake(f: &NonnegFn) -> LayerCake {
    let ordering = canonical_ordering(f);
    let values: Vec<Mass> = ordering.indices().iter().map(|&i| f.value(i)).collect();
    let layers = values
        .iter()
        .enumerate()
        .filter_map(|(r, v)| {
            let next = values.get(r + 1).cloned().unwrap_or_else(Mass::zero);
            let coefficient = v - next;
            (!coefficient.is_zero()).then_some(Layer { coefficient, size: r + 1 })
        })
        .collect();
    LayerCake { ordering, layers }
}

/// The unique shape-equivalent pair `f = triangle + square`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub triangle: NonnegFn,
    pub square: NonnegFn,
    pub ordering: OrderedIndexSet,
}

pub fn decompose(f: &NonnegFn) -> Decomposition {
    let cake = layer_cake(f);
    Decomposition {
        triangle: cake.sum_where(|size| size % 2 == 1),
        square: cake.sum_where(|size| size % 2 == 0),
        ordering: cake.ordering,
    }
}
