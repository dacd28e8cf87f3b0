use serde::{Deserialize, Serialize};

use super::finite_group::FiniteGroup;
use crate::{Error, Result};

/// Arrow `(target, elem, source)` of a gauge groupoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaugeMorphism {
    pub target: usize,
    pub elem: usize,
    pub source: usize,
}

impl GaugeMorphism {
    pub fn new(target: usize, elem: usize, source: usize) -> Self {
        GaugeMorphism { target, elem, source }
    }
}

/// The transitive groupoid `Ω × G × Ω` over a finite set of objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeGroupoid {
    n_objects: usize,
    group: FiniteGroup,
}

impl GaugeGroupoid {
    pub fn new(n_objects: usize, group: FiniteGroup) -> Result<Self> {
        if n_objects == 0 {
            return Err(Error::BadParams("a gauge groupoid needs at least one object".into()));
        }
        Ok(GaugeGroupoid { n_objects, group })
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn n_morphisms(&self) -> usize {
        self.n_objects * self.n_objects * self.group.order()
    }

    /// Dense index of a morphism in `0..n_morphisms()`.
    pub fn index(&self, m: &GaugeMorphism) -> usize {
        (m.target * self.group.order() + m.elem) * self.n_objects + m.source
    }

    pub fn morphisms(&self) -> impl Iterator<Item = GaugeMorphism> + '_ {
        let (n, k) = (self.n_objects, self.group.order());
        (0..n).flat_map(move |y| (0..k).flat_map(move |g| (0..n).map(move |x| GaugeMorphism::new(y, g, x))))
    }

    /// Arrows `x → x`.
    pub fn isotropy(&self, x: usize) -> impl Iterator<Item = GaugeMorphism> + '_ {
        self.group.elements().map(move |g| GaugeMorphism::new(x, g, x))
    }

    pub fn contains(&self, m: &GaugeMorphism) -> bool {
        m.target < self.n_objects && m.source < self.n_objects && m.elem < self.group.order()
    }

    /// `(z, h, y) ∘ (y, g, x) = (z, h·g, x)`.
    pub fn compose(&self, beta: &GaugeMorphism, alpha: &GaugeMorphism) -> Result<GaugeMorphism> {
        if !self.contains(alpha) || !self.contains(beta) {
            return Err(Error::BadParams("morphism does not belong to this groupoid".into()));
        }
        if alpha.target != beta.source {
            return Err(Error::NonComposable(format!(
                "first arrow ends at {} but second starts at {}",
                alpha.target, beta.source
            )));
        }
        Ok(GaugeMorphism::new(beta.target, self.group.mul(beta.elem, alpha.elem), alpha.source))
    }

    pub fn inverse(&self, alpha: &GaugeMorphism) -> GaugeMorphism {
        GaugeMorphism::new(alpha.source, self.group.inv(alpha.elem), alpha.target)
    }

    pub fn unit(&self, x: usize) -> GaugeMorphism {
        GaugeMorphism::new(x, self.group.identity(), x)
    }
}
