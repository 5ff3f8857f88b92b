//! Finite rings presented by their addition and multiplication tables.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest order accepted unless the caller raises the bound.
pub const DEFAULT_MAX_ORDER: usize = 64;

/// Shared handle to a validated ring. Subsets and ideals keep one of these
/// so that combining sets from different rings can be detected.
pub type Ring = Arc<FiniteRing>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("bad table shape: {0}")]
    BadTableShape(String),
    #[error("order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("addition is not commutative: {a} + {b} != {b} + {a}")]
    AddNotCommutative { a: usize, b: usize },
    #[error("addition is not associative at ({a}, {b}, {c})")]
    AddNotAssociative { a: usize, b: usize, c: usize },
    #[error("addition has no neutral element")]
    NoZero,
    #[error("element {a} has no additive inverse")]
    NoInverse { a: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("{side} distributivity fails at ({a}, {b}, {c})")]
    NotDistributive { a: usize, b: usize, c: usize, side: Side },
    #[error("{0} labels given for a ring of order {1}")]
    BadLabels(usize, usize),
}

impl RingError {
    /// True for the additive-group failures.
    pub fn is_group_error(&self) -> bool {
        matches!(
            self,
            RingError::AddNotCommutative { .. }
                | RingError::AddNotAssociative { .. }
                | RingError::NoZero
                | RingError::NoInverse { .. }
        )
    }
}

/// Unvalidated ring data, as read from a file or produced by a constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRing {
    pub name: String,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub labels: Option<Vec<String>>,
}

impl RawRing {
    pub fn order(&self) -> usize {
        self.add.len()
    }

    /// Tables from two closures over `0..order`.
    pub fn from_fns(
        name: impl Into<String>,
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Self {
        RawRing {
            name: name.into(),
            add: (0..order).map(|a| (0..order).map(|b| add(a, b)).collect()).collect(),
            mul: (0..order).map(|a| (0..order).map(|b| mul(a, b)).collect()).collect(),
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingProperties {
    pub commutative: bool,
    pub has_identity: bool,
    pub identity_index: Option<usize>,
}

/// A ring of order `n` whose elements are the indices `0..n`.
///
/// Instances only exist after every ring axiom has been checked on every
/// triple, so downstream code never re-validates.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    identity: Option<usize>,
    commutative: bool,
    labels: Vec<String>,
}

impl FiniteRing {
    /// Checks shape and all axioms exhaustively; `max_order` bounds `n`.
    pub fn validate(raw: RawRing, max_order: usize) -> Result<Self, RingError> {
        let n = raw.order();
        if n == 0 {
            return Err(RingError::BadTableShape("ring must have at least one element".into()));
        }
        if n > max_order {
            return Err(RingError::OrderTooLarge {
                order: n,
                max: max_order,
            });
        }
        let flatten = |name: &str, table: &[Vec<usize>]| -> Result<Vec<u32>, RingError> {
            if table.len() != n {
                return Err(RingError::BadTableShape(format!(
                    "{name} table has {} rows, expected {n}",
                    table.len()
                )));
            }
            let mut flat = Vec::with_capacity(n * n);
            for (r, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(RingError::BadTableShape(format!(
                        "{name} row {r} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (c, &v) in row.iter().enumerate() {
                    if v >= n {
                        return Err(RingError::BadTableShape(format!(
                            "{name}[{r}][{c}] = {v} is out of range 0..{n}"
                        )));
                    }
                    flat.push(v as u32);
                }
            }
            Ok(flat)
        };
        let add = flatten("add", &raw.add)?;
        let mul = flatten("mul", &raw.mul)?;
        let labels = match raw.labels {
            Some(l) if l.len() != n => return Err(RingError::BadLabels(l.len(), n)),
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };

        let at = |t: &[u32], a: usize, b: usize| t[a * n + b] as usize;

        for a in 0..n {
            for b in (a + 1)..n {
                if at(&add, a, b) != at(&add, b, a) {
                    return Err(RingError::AddNotCommutative { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(&add, a, b);
                for c in 0..n {
                    if at(&add, ab, c) != at(&add, a, at(&add, b, c)) {
                        return Err(RingError::AddNotAssociative { a, b, c });
                    }
                }
            }
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|a| at(&add, z, a) == a))
            .ok_or(RingError::NoZero)?;
        let mut neg = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| at(&add, a, b) == zero)
                .ok_or(RingError::NoInverse { a })?;
            neg.push(inv as u32);
        }

        for a in 0..n {
            for b in 0..n {
                let ab = at(&mul, a, b);
                for c in 0..n {
                    let bc = at(&add, b, c);
                    if at(&mul, a, bc) != at(&add, ab, at(&mul, a, c)) {
                        return Err(RingError::NotDistributive {
                            a,
                            b,
                            c,
                            side: Side::Left,
                        });
                    }
                    let ac = at(&mul, a, c);
                    if at(&mul, at(&add, a, b), c) != at(&add, ac, at(&mul, b, c)) {
                        return Err(RingError::NotDistributive {
                            a,
                            b,
                            c,
                            side: Side::Right,
                        });
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(&mul, a, b);
                for c in 0..n {
                    if at(&mul, ab, c) != at(&mul, a, at(&mul, b, c)) {
                        return Err(RingError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        let commutative = (0..n).all(|a| (a + 1..n).all(|b| at(&mul, a, b) == at(&mul, b, a)));
        let identity = (0..n).find(|&e| (0..n).all(|a| at(&mul, e, a) == a && at(&mul, a, e) == a));

        Ok(FiniteRing {
            name: raw.name,
            order: n,
            add,
            mul,
            neg,
            zero,
            identity,
            commutative,
            labels,
        })
    }

    /// Validates and wraps in a shared handle.
    pub fn build(raw: RawRing, max_order: usize) -> Result<Ring, RingError> {
        Self::validate(raw, max_order).map(Arc::new)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    #[inline]
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn properties(&self) -> RingProperties {
        RingProperties {
            commutative: self.commutative,
            has_identity: self.identity.is_some(),
            identity_index: self.identity,
        }
    }

    /// Additive order of `a`.
    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn is_idempotent_element(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// True when every product is zero.
    pub fn has_zero_multiplication(&self) -> bool {
        self.mul.iter().all(|&v| v as usize == self.zero)
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        self.mul
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn to_raw(&self) -> RawRing {
        RawRing {
            name: self.name.clone(),
            add: self.add_table(),
            mul: self.mul_table(),
            labels: Some(self.labels.clone()),
        }
    }

    /// Same tables under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> FiniteRing {
        FiniteRing {
            name: name.into(),
            ..self.clone()
        }
    }

    /// Both tables as aligned text, for diagnostics.
    pub fn render_tables(&self) -> String {
        let width = self.labels.iter().map(|l| l.len()).max().unwrap_or(1).max(1);
        let mut out = String::new();
        for (sym, table) in [("+", &self.add), ("*", &self.mul)] {
            out.push_str(&format!("{sym:>width$} |"));
            for l in &self.labels {
                out.push_str(&format!(" {l:>width$}"));
            }
            out.push('\n');
            out.push_str(&"-".repeat((width + 1) * (self.order + 1) + 1));
            out.push('\n');
            for a in 0..self.order {
                out.push_str(&format!("{:>width$} |", self.labels[a]));
                for b in 0..self.order {
                    let v = table[a * self.order + b] as usize;
                    out.push_str(&format!(" {:>width$}", self.labels[v]));
                }
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("zero", &self.zero)
            .field("identity", &self.identity)
            .field("commutative", &self.commutative)
            .finish()
    }
}

/// Free-function form of [`FiniteRing::properties`].
pub fn ring_properties(ring: &FiniteRing) -> RingProperties {
    ring.properties()
}

/// Validates raw tables with the default order bound.
pub fn validate_ring(raw: RawRing) -> Result<FiniteRing, RingError> {
    FiniteRing::validate(raw, DEFAULT_MAX_ORDER)
}
