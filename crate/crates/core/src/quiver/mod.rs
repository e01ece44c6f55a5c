//! Quivers without oriented cycles, dimension vectors and weights.

mod kronecker;
mod presets;

pub use kronecker::{kronecker_si_dim, kronecker_si_dim_general, rectangle_partitions};
pub use presets::{k4_star_quiver, t434_quiver};

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    labels: Vec<String>,
    /// `(tail, head)` vertex indices.
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Rejects arrows to unknown vertices and oriented cycles (including loops).
    pub fn new(labels: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        if let Some(&(tail, head)) = arrows.iter().find(|&&(t, h)| t >= n || h >= n) {
            return Err(Error::BadArrow {
                tail,
                head,
                vertices: n,
            });
        }
        let quiver = Quiver { labels, arrows };
        if quiver.topological_order().is_none() {
            return Err(Error::OrientedCycle);
        }
        Ok(quiver)
    }

    /// Builds a quiver from labelled arrows, creating vertices in order of
    /// first appearance.
    pub fn from_labelled(arrows: &[(&str, &str)]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let index = |name: &str, labels: &mut Vec<String>| {
            labels.iter().position(|l| l == name).unwrap_or_else(|| {
                labels.push(name.to_string());
                labels.len() - 1
            })
        };
        let arrows = arrows
            .iter()
            .map(|&(t, h)| (index(t, &mut labels), index(h, &mut labels)))
            .collect();
        Quiver::new(labels, arrows)
    }

    /// Kahn's algorithm; `None` if there is an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.labels.len();
        let mut indegree = vec![0usize; n];
        for &(_, h) in &self.arrows {
            indegree[h] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &(t, h) in &self.arrows {
                if t == v {
                    indegree[h] -= 1;
                    if indegree[h] == 0 {
                        queue.push_back(h);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn dimension_vector(&self, values: Vec<i64>) -> Result<DimensionVector> {
        self.check_len(values.len())?;
        if values.iter().any(|&v| v < 0) {
            return Err(Error::NegativeDimension);
        }
        Ok(DimensionVector(values))
    }

    /// Dimension vector from `(label, value)` pairs; unlisted vertices are 0.
    pub fn dimension_vector_by_label(&self, entries: &[(&str, i64)]) -> Result<DimensionVector> {
        let mut values = vec![0; self.vertex_count()];
        for &(label, v) in entries {
            let x = self
                .vertex(label)
                .unwrap_or_else(|| panic!("unknown vertex label `{label}`"));
            values[x] = v;
        }
        self.dimension_vector(values)
    }

    pub fn weight(&self, values: Vec<i64>) -> Result<Weight> {
        self.check_len(values.len())?;
        Ok(Weight(values))
    }

    /// `e_x`.
    pub fn simple_root(&self, x: usize) -> DimensionVector {
        let mut values = vec![0; self.vertex_count()];
        values[x] = 1;
        DimensionVector(values)
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got != self.vertex_count() {
            return Err(Error::QuiverMismatch {
                expected: self.vertex_count(),
                got,
            });
        }
        Ok(())
    }
}

/// `θ(l)`: vertices `1, 2` and `l` arrows from `2` to `1`.
pub fn kronecker_quiver(l: u32) -> Result<Quiver> {
    if l == 0 {
        return Err(Error::NoArrows);
    }
    Quiver::new(vec!["1".into(), "2".into()], vec![(1, 0); l as usize])
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DimensionVector(Vec<i64>);

impl DimensionVector {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn scale(&self, k: i64) -> DimensionVector {
        DimensionVector(self.0.iter().map(|v| v * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }
}

impl std::ops::Add for &DimensionVector {
    type Output = DimensionVector;

    fn add(self, rhs: &DimensionVector) -> DimensionVector {
        assert_eq!(
            self.0.len(),
            rhs.0.len(),
            "dimension vectors on different quivers"
        );
        DimensionVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A character of `GL(β)`, one integer per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    /// `σ(β) = Σ_x σ(x) β(x)`.
    pub fn evaluate(&self, beta: &DimensionVector) -> i64 {
        assert_eq!(
            self.0.len(),
            beta.0.len(),
            "weight and vector on different quivers"
        );
        self.0.iter().zip(&beta.0).map(|(s, b)| s * b).sum()
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.into_iter().map(|v| -v).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `⟨α,β⟩ = Σ_x α(x)β(x) − Σ_{a} α(ta)β(ha)`.
pub fn euler_form(q: &Quiver, alpha: &DimensionVector, beta: &DimensionVector) -> Result<i64> {
    q.check_len(alpha.0.len())?;
    q.check_len(beta.0.len())?;
    let diagonal: i64 = alpha.0.iter().zip(&beta.0).map(|(a, b)| a * b).sum();
    let arrows: i64 = q.arrows.iter().map(|&(t, h)| alpha.0[t] * beta.0[h]).sum();
    Ok(diagonal - arrows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `x ↦ ⟨γ, e_x⟩`
    Left,
    /// `x ↦ ⟨e_x, γ⟩`
    Right,
}

pub fn weight_of(q: &Quiver, side: Side, gamma: &DimensionVector) -> Result<Weight> {
    q.check_len(gamma.0.len())?;
    let values = (0..q.vertex_count())
        .map(|x| {
            let e = q.simple_root(x);
            match side {
                Side::Left => euler_form(q, gamma, &e),
                Side::Right => euler_form(q, &e, gamma),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Weight(values))
}

/// Two dimension vectors with `⟨ε1,ε1⟩ = ⟨ε2,ε2⟩ = 1` and `⟨ε2,ε1⟩ = −l ≤ 0`.
/// Only these Euler-form conditions are checked; the Schur-root conditions
/// of an exceptional sequence are assumed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalPair {
    first: DimensionVector,
    second: DimensionVector,
    arrows: u32,
}

impl ExceptionalPair {
    pub fn new(q: &Quiver, first: DimensionVector, second: DimensionVector) -> Result<Self> {
        for (name, e) in [("ε1", &first), ("ε2", &second)] {
            let self_pairing = euler_form(q, e, e)?;
            if self_pairing != 1 {
                return Err(Error::NotExceptional(format!(
                    "⟨{name},{name}⟩ = {self_pairing}"
                )));
            }
        }
        let cross = euler_form(q, &second, &first)?;
        if cross > 0 {
            return Err(Error::NotExceptional(format!("⟨ε2,ε1⟩ = {cross} > 0")));
        }
        Ok(ExceptionalPair {
            first,
            second,
            arrows: (-cross) as u32,
        })
    }

    pub fn first(&self) -> &DimensionVector {
        &self.first
    }

    pub fn second(&self) -> &DimensionVector {
        &self.second
    }

    /// `l` with `⟨ε2,ε1⟩ = −l`; the pair embeds `θ(l)`.
    pub fn arrows(&self) -> u32 {
        self.arrows
    }

    /// `I(β1, β2) = β1 ε1 + β2 ε2`.
    pub fn embed(&self, b1: u64, b2: u64) -> DimensionVector {
        &self.first.scale(b1 as i64) + &self.second.scale(b2 as i64)
    }
}
