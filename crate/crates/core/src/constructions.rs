//! Ring constructors: modular rings, matrix and triangular rings over `Z_n`,
//! subrings, direct products, quotients and the worked examples.
//!
//! Matrix elements are encoded positionally: the stored entries, read in
//! row-major order, are the base-`n` digits of the element index with the
//! first entry least significant. For a `k × k` matrix ring every entry is
//! stored; for the upper-triangular ring only entries with `row <= col`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::bits::BitSet;
use crate::homs::RingHom;
use crate::ideal::{ElementSubset, IdealError, IdealHandle, IdealKind};
use crate::ring::{FiniteRing, RawRing, Ring, RingError, DEFAULT_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("ring of order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("subset is not closed: {a} {op} {b} = {result} falls outside")]
    NotClosed {
        a: usize,
        b: usize,
        op: char,
        result: usize,
    },
    #[error("subset does not contain zero")]
    MissingZero,
    #[error("ideal is not two-sided")]
    NotTwoSided,
    #[error("unknown built-in example `{0}`")]
    UnknownName(String),
    #[error("isomorphism search is limited to order {max}, got {order}")]
    IsoOrderTooLarge { order: usize, max: usize },
    #[error("invalid argument: {0}")]
    BadArgument(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

fn checked_order(base: usize, digits: usize, max: usize) -> Result<usize, ConstructionError> {
    let order = u32::try_from(digits)
        .ok()
        .and_then(|d| base.checked_pow(d))
        .ok_or(ConstructionError::OrderTooLarge { order: usize::MAX, max })?;
    if order > max {
        return Err(ConstructionError::OrderTooLarge { order, max });
    }
    Ok(order)
}

/// `Z_n`. For `n == 1` the single element is both zero and identity.
pub fn zmod(n: usize) -> Ring {
    assert!(n >= 1, "Z_n needs n >= 1");
    let raw = RawRing::from_fns(format!("zmod:{n}"), n, |a, b| (a + b) % n, |a, b| (a * b) % n);
    FiniteRing::build(raw, n).expect("Z_n satisfies the ring axioms")
}

/// Entry positions `(row, col)` stored by a matrix encoding.
fn positions(k: usize, triangular: bool) -> Vec<(usize, usize)> {
    (0..k)
        .flat_map(|r| (0..k).map(move |c| (r, c)))
        .filter(|&(r, c)| !triangular || r <= c)
        .collect()
}

/// Shared builder for full and upper-triangular matrix rings.
fn matrix_like(base: usize, k: usize, triangular: bool, max_order: usize) -> Result<Ring, ConstructionError> {
    if base < 1 || k < 1 {
        return Err(ConstructionError::BadArgument(format!(
            "need base >= 1 and k >= 1, got {base}, {k}"
        )));
    }
    let pos = positions(k, triangular);
    let order = checked_order(base, pos.len(), max_order)?;
    let decode = |mut x: usize| -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; k]; k];
        for &(r, c) in &pos {
            m[r][c] = x % base;
            x /= base;
        }
        m
    };
    let encode = |m: &[Vec<usize>]| -> usize { pos.iter().rev().fold(0, |acc, &(r, c)| acc * base + m[r][c] % base) };
    let mats: Vec<Vec<Vec<usize>>> = (0..order).map(decode).collect();
    let add = |a: usize, b: usize| {
        let m: Vec<Vec<usize>> = (0..k)
            .map(|r| (0..k).map(|c| (mats[a][r][c] + mats[b][r][c]) % base).collect())
            .collect();
        encode(&m)
    };
    let mul = |a: usize, b: usize| {
        let m: Vec<Vec<usize>> = (0..k)
            .map(|r| {
                (0..k)
                    .map(|c| (0..k).map(|t| mats[a][r][t] * mats[b][t][c]).sum::<usize>() % base)
                    .collect()
            })
            .collect();
        encode(&m)
    };
    let name = if triangular {
        format!("tri:{base}:{k}")
    } else {
        format!("matrix:{base}:{k}")
    };
    let raw = RawRing::from_fns(name, order, add, mul);
    Ok(FiniteRing::build(raw, max_order)?)
}

/// Full `k × k` matrix ring over `Z_base`.
pub fn matrix_ring(base: usize, k: usize, max_order: usize) -> Result<Ring, ConstructionError> {
    matrix_like(base, k, false, max_order)
}

/// Upper-triangular `k × k` matrices over `Z_base`.
pub fn upper_triangular(base: usize, k: usize, max_order: usize) -> Result<Ring, ConstructionError> {
    matrix_like(base, k, true, max_order)
}

/// Index of the matrix with the given entries in [`matrix_ring`] /
/// [`upper_triangular`] encoding. Entries below the diagonal are ignored for
/// the triangular encoding.
pub fn matrix_index(base: usize, entries: &[Vec<usize>], triangular: bool) -> usize {
    let k = entries.len();
    positions(k, triangular)
        .iter()
        .rev()
        .fold(0, |acc, &(r, c)| acc * base + entries[r][c] % base)
}

/// A subring re-indexed to `0..m`, with the map back into the parent.
#[derive(Debug, Clone)]
pub struct Subring {
    pub ring: Ring,
    /// `embedding[i]` is the parent index of subring element `i`.
    pub embedding: Vec<usize>,
}

/// Restricts the parent tables to `subset`. Elements keep their parent order.
pub fn subring(parent: &Ring, subset: &ElementSubset, name: impl Into<String>) -> Result<Subring, ConstructionError> {
    if !Arc::ptr_eq(parent, subset.ring()) {
        return Err(IdealError::RingMismatch.into());
    }
    if !subset.contains(parent.zero()) {
        return Err(ConstructionError::MissingZero);
    }
    let elems = subset.elements();
    let mut index_of = vec![usize::MAX; parent.order()];
    for (i, &e) in elems.iter().enumerate() {
        index_of[e] = i;
    }
    for &a in &elems {
        for &b in &elems {
            for (op, result) in [('+', parent.add(a, b)), ('*', parent.mul(a, b))] {
                if !subset.contains(result) {
                    return Err(ConstructionError::NotClosed { a, b, op, result });
                }
            }
        }
    }
    let m = elems.len();
    let raw = RawRing::from_fns(
        name,
        m,
        |i, j| index_of[parent.add(elems[i], elems[j])],
        |i, j| index_of[parent.mul(elems[i], elems[j])],
    )
    .with_labels(elems.iter().map(|&e| parent.label(e).to_string()).collect());
    let ring = FiniteRing::build(raw, m.max(1))?;
    Ok(Subring { ring, embedding: elems })
}

/// `R × S` with element `(r, s)` at index `r * |S| + s`.
#[derive(Debug, Clone)]
pub struct ProductRing {
    pub ring: Ring,
    pub left: Ring,
    pub right: Ring,
    pub proj_left: RingHom,
    pub proj_right: RingHom,
}

impl ProductRing {
    pub fn pair_index(&self, r: usize, s: usize) -> usize {
        r * self.right.order() + s
    }

    pub fn components(&self, x: usize) -> (usize, usize) {
        (x / self.right.order(), x % self.right.order())
    }

    /// `I × J` for ideals of the two factors.
    pub fn ideal_embed(&self, i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle, ConstructionError> {
        if !Arc::ptr_eq(i.ring(), &self.left) || !Arc::ptr_eq(j.ring(), &self.right) {
            return Err(IdealError::RingMismatch.into());
        }
        let bits = self.embed_bits(i.bits(), j.bits());
        let kind = match (i.kind(), j.kind()) {
            (IdealKind::TwoSided, k) | (k, IdealKind::TwoSided) => k,
            (k, _) => k,
        };
        Ok(IdealHandle::new(ElementSubset::new(&self.ring, bits), kind)?)
    }

    pub fn embed_bits(&self, i: &BitSet, j: &BitSet) -> BitSet {
        let mut bits = BitSet::empty(self.ring.order());
        for r in i.iter() {
            for s in j.iter() {
                bits.insert(self.pair_index(r, s));
            }
        }
        bits
    }
}

pub fn direct_product(left: &Ring, right: &Ring, max_order: usize) -> Result<ProductRing, ConstructionError> {
    let (n, m) = (left.order(), right.order());
    let order = n.checked_mul(m).ok_or(ConstructionError::OrderTooLarge {
        order: usize::MAX,
        max: max_order,
    })?;
    if order > max_order {
        return Err(ConstructionError::OrderTooLarge { order, max: max_order });
    }
    let split = |x: usize| (x / m, x % m);
    let raw = RawRing::from_fns(
        format!("product:{},{}", left.name(), right.name()),
        order,
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            left.add(a, c) * m + right.add(b, d)
        },
        |x, y| {
            let ((a, b), (c, d)) = (split(x), split(y));
            left.mul(a, c) * m + right.mul(b, d)
        },
    )
    .with_labels(
        (0..order)
            .map(|x| format!("({},{})", left.label(x / m), right.label(x % m)))
            .collect(),
    );
    let ring = FiniteRing::build(raw, max_order)?;
    let proj_left = RingHom::from_parts_unchecked(&ring, left, (0..order).map(|x| x / m).collect());
    let proj_right = RingHom::from_parts_unchecked(&ring, right, (0..order).map(|x| x % m).collect());
    Ok(ProductRing {
        ring,
        left: Arc::clone(left),
        right: Arc::clone(right),
        proj_left,
        proj_right,
    })
}

/// `R / I` together with the canonical projection.
#[derive(Debug, Clone)]
pub struct QuotientDescriptor {
    pub parent: Ring,
    pub modulus: IdealHandle,
    pub ring: Ring,
    /// Smallest parent index in each coset, in coset order.
    pub coset_reps: Vec<usize>,
    pub projection: RingHom,
}

impl QuotientDescriptor {
    /// Image of a parent subset in the quotient.
    pub fn image_bits(&self, bits: &BitSet) -> BitSet {
        self.projection.image_bits(bits)
    }
}

pub fn quotient(parent: &Ring, modulus: &IdealHandle) -> Result<QuotientDescriptor, ConstructionError> {
    if !Arc::ptr_eq(parent, modulus.ring()) {
        return Err(IdealError::RingMismatch.into());
    }
    if crate::ideal::is_ideal(modulus.subset(), IdealKind::TwoSided).is_err() {
        return Err(ConstructionError::NotTwoSided);
    }
    let n = parent.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let members = modulus.subset().elements();
    for a in 0..n {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(a);
        for &i in &members {
            coset_of[parent.add(a, i)] = idx;
        }
    }
    let m = reps.len();
    let suffix = if modulus.is_zero() {
        String::new()
    } else {
        "+I".to_string()
    };
    let raw = RawRing::from_fns(
        format!("{}/{}", parent.name(), modulus.subset()),
        m,
        |x, y| coset_of[parent.add(reps[x], reps[y])],
        |x, y| coset_of[parent.mul(reps[x], reps[y])],
    )
    .with_labels(reps.iter().map(|&r| format!("{}{suffix}", parent.label(r))).collect());
    let ring = FiniteRing::build(raw, m)?;
    let projection = RingHom::from_parts_unchecked(parent, &ring, coset_of);
    Ok(QuotientDescriptor {
        parent: Arc::clone(parent),
        modulus: modulus.clone(),
        ring,
        coset_reps: reps,
        projection,
    })
}

/// The worked examples that ship as built-ins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PaperExample {
    /// Order-4 noncommutative ring without identity on `{0, a, b, c}`.
    TwoOneII,
    /// The four-element subring of `M_2(Z_2)` isomorphic to [`PaperExample::TwoOneII`].
    TwoOneIII,
    /// Upper-triangular `2 × 2` matrices over `Z_p`.
    TwoOneIV { p: usize },
}

impl PaperExample {
    pub const DEFAULT_P: usize = 3;
}

impl fmt::Display for PaperExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaperExample::TwoOneII => f.write_str("ex-2-1-ii"),
            PaperExample::TwoOneIII => f.write_str("ex-2-1-iii"),
            PaperExample::TwoOneIV { p } => write!(f, "ex-2-1-iv-zp({p})"),
        }
    }
}

impl FromStr for PaperExample {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ex-2-1-ii" => return Ok(PaperExample::TwoOneII),
            "ex-2-1-iii" => return Ok(PaperExample::TwoOneIII),
            "ex-2-1-iv" | "ex-2-1-iv-zp" => return Ok(PaperExample::TwoOneIV { p: Self::DEFAULT_P }),
            _ => {}
        }
        s.strip_prefix("ex-2-1-iv-zp(")
            .and_then(|rest| rest.strip_suffix(')'))
            .and_then(|p| p.parse().ok())
            .filter(|&p: &usize| p >= 2)
            .map(|p| PaperExample::TwoOneIV { p })
            .ok_or_else(|| ConstructionError::UnknownName(s.to_string()))
    }
}

/// Index of `c·e22` in `upper_triangular(p, 2)`.
pub fn tri2_e22(p: usize, c: usize) -> usize {
    matrix_index(p, &[vec![0, 0], vec![0, c % p]], true)
}

/// Index of `b·e12` in `upper_triangular(p, 2)`.
pub fn tri2_e12(p: usize, b: usize) -> usize {
    matrix_index(p, &[vec![0, b % p], vec![0, 0]], true)
}

/// Elements `0, e11+e12, e21+e22, e11+e12+e21+e22` of `M_2(Z_2)`.
pub fn ex_iii_elements() -> [usize; 4] {
    [
        0,
        matrix_index(2, &[vec![1, 1], vec![0, 0]], false),
        matrix_index(2, &[vec![0, 0], vec![1, 1]], false),
        matrix_index(2, &[vec![1, 1], vec![1, 1]], false),
    ]
}

pub fn builtin_example(which: PaperExample) -> Result<Ring, ConstructionError> {
    match which {
        PaperExample::TwoOneII => {
            // 0, a, b, c: Klein four addition; x*a = x*b = x and x*c = 0.
            let add = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
            let mul = vec![vec![0, 0, 0, 0], vec![0, 1, 1, 0], vec![0, 2, 2, 0], vec![0, 3, 3, 0]];
            let raw = RawRing {
                name: format!("paper:{which}"),
                add,
                mul,
                labels: Some(["0", "a", "b", "c"].map(String::from).to_vec()),
            };
            Ok(FiniteRing::build(raw, 4)?)
        }
        PaperExample::TwoOneIII => {
            let m2 = matrix_ring(2, 2, 16)?;
            let subset = ElementSubset::from_indices(&m2, ex_iii_elements())?;
            let sub = subring(&m2, &subset, format!("paper:{which}"))?;
            let labels = ["0", "e11+e12", "e21+e22", "e11+e12+e21+e22"]
                .map(String::from)
                .to_vec();
            let raw = sub.ring.to_raw().with_labels(labels);
            Ok(FiniteRing::build(raw, 4)?)
        }
        PaperExample::TwoOneIV { p } => {
            let tri = upper_triangular(p, 2, DEFAULT_MAX_ORDER.max(p.pow(3)))?;
            Ok(Arc::new(tri.renamed(format!("paper:{which}"))))
        }
    }
}

/// Largest order handled by [`find_isomorphism`].
pub const ISO_MAX_ORDER: usize = 8;

/// Searches for a bijection `R → S` preserving both operations. Candidates
/// for each element are restricted to elements of equal additive order and
/// partial maps are checked on every assigned pair as they grow.
pub fn find_isomorphism(r: &FiniteRing, s: &FiniteRing) -> Result<Option<Vec<usize>>, ConstructionError> {
    let n = r.order();
    if n > ISO_MAX_ORDER || s.order() > ISO_MAX_ORDER {
        return Err(ConstructionError::IsoOrderTooLarge {
            order: n.max(s.order()),
            max: ISO_MAX_ORDER,
        });
    }
    if n != s.order() || r.is_commutative() != s.is_commutative() || r.identity().is_some() != s.identity().is_some() {
        return Ok(None);
    }
    let r_ord: Vec<usize> = r.elements().map(|a| r.additive_order(a)).collect();
    let s_ord: Vec<usize> = s.elements().map(|a| s.additive_order(a)).collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    // Elements are assigned in index order, so a pair is fully determined
    // once all of x, y and the result are at most `upto`.
    fn consistent(r: &FiniteRing, s: &FiniteRing, map: &[usize], upto: usize) -> bool {
        (0..=upto).all(|x| {
            (0..=upto).all(|y| {
                let sum = r.add(x, y);
                let prod = r.mul(x, y);
                (sum > upto || map[sum] == s.add(map[x], map[y])) && (prod > upto || map[prod] == s.mul(map[x], map[y]))
            })
        })
    }

    fn search(
        r: &FiniteRing,
        s: &FiniteRing,
        r_ord: &[usize],
        s_ord: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        if next == map.len() {
            return true;
        }
        for cand in 0..map.len() {
            if used[cand] || s_ord[cand] != r_ord[next] {
                continue;
            }
            map[next] = cand;
            used[cand] = true;
            if consistent(r, s, map, next) && search(r, s, r_ord, s_ord, map, used, next + 1) {
                return true;
            }
            used[cand] = false;
            map[next] = usize::MAX;
        }
        false
    }

    if search(r, s, &r_ord, &s_ord, &mut map, &mut used, 0) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{enumerate_ideals, enumerate_ideals_oracle, ideal_product, principal};

    #[test]
    fn zmod_basics() {
        let z1 = zmod(1);
        assert_eq!(z1.order(), 1);
        let z12 = zmod(12);
        assert_eq!(enumerate_ideals(&z12, IdealKind::TwoSided).len(), 6);
        let z4: Vec<Vec<usize>> = enumerate_ideals(&zmod(4), IdealKind::TwoSided)
            .iter()
            .map(|i| i.subset().elements())
            .collect();
        assert_eq!(z4, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn matrix_rings() {
        let m = matrix_ring(2, 2, 64).unwrap();
        assert_eq!(m.order(), 16);
        assert!(!m.is_commutative());
        let id = matrix_index(2, &[vec![1, 0], vec![0, 1]], false);
        assert_eq!(m.identity(), Some(id));
        assert_eq!(enumerate_ideals_oracle(&m, IdealKind::TwoSided).unwrap().len(), 2);
        assert_eq!(upper_triangular(3, 2, 64).unwrap().order(), 27);
        assert_eq!(upper_triangular(2, 2, 64).unwrap().order(), 8);
        assert!(matches!(
            matrix_ring(3, 2, 64),
            Err(ConstructionError::OrderTooLarge { order: 81, max: 64 })
        ));
    }

    #[test]
    fn subrings() {
        let m = matrix_ring(2, 2, 64).unwrap();
        let e11 = matrix_index(2, &[vec![1, 0], vec![0, 0]], false);
        let s = subring(&m, &ElementSubset::from_indices(&m, [0, e11]).unwrap(), "e11").unwrap();
        assert_eq!(s.ring.order(), 2);
        assert_eq!(s.embedding, vec![0, e11]);
        let zero = subring(&m, &ElementSubset::zero(&m), "0").unwrap();
        assert_eq!(zero.ring.order(), 1);
        let e12 = matrix_index(2, &[vec![0, 1], vec![0, 0]], false);
        let e21 = matrix_index(2, &[vec![0, 0], vec![1, 0]], false);
        let bad = subring(&m, &ElementSubset::from_indices(&m, [0, e12, e21]).unwrap(), "bad");
        assert!(matches!(bad, Err(ConstructionError::NotClosed { .. })));
    }

    #[test]
    fn products() {
        let z2 = zmod(2);
        let p = direct_product(&z2, &z2, 64).unwrap();
        assert_eq!(p.ring.order(), 4);
        assert_eq!(p.ring.identity(), Some(p.pair_index(1, 1)));

        let z4 = zmod(4);
        let z9 = zmod(9);
        let p = direct_product(&z4, &z9, 64).unwrap();
        let i = principal(&z4, 2, IdealKind::TwoSided).unwrap();
        let whole = IdealHandle::whole(&z9, IdealKind::TwoSided);
        let emb = p.ideal_embed(&i, &whole).unwrap();
        assert_eq!(emb.len(), 18);
        assert!(emb.is_proper());
    }

    #[test]
    fn product_ideals_are_boxes() {
        let z4 = zmod(4);
        let z2 = zmod(2);
        let p = direct_product(&z2, &z4, 64).unwrap();
        let ideals = enumerate_ideals(&p.ring, IdealKind::TwoSided);
        let mut boxes = Vec::new();
        for i in enumerate_ideals(&z2, IdealKind::TwoSided) {
            for j in enumerate_ideals(&z4, IdealKind::TwoSided) {
                boxes.push(p.ideal_embed(&i, &j).unwrap().bits().clone());
            }
        }
        assert_eq!(ideals.len(), boxes.len());
        assert!(ideals.iter().all(|x| boxes.contains(x.bits())));
    }

    #[test]
    fn quotients() {
        let z12 = zmod(12);
        let four = principal(&z12, 4, IdealKind::TwoSided).unwrap();
        let q = quotient(&z12, &four).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert!(find_isomorphism(&q.ring, &zmod(4)).unwrap().is_some());
        assert_eq!(q.projection.kernel().bits(), four.bits());

        let trivial = quotient(&z12, &IdealHandle::zero(&z12, IdealKind::TwoSided)).unwrap();
        assert_eq!(trivial.ring.order(), 12);
        assert_eq!(trivial.ring.add_table(), z12.add_table());

        let r = builtin_example(PaperExample::TwoOneII).unwrap();
        let p = ElementSubset::from_indices(&r, [0, 1]).unwrap();
        // {0,a} is only a right ideal.
        let p_right = IdealHandle::new(p.clone(), IdealKind::Right).unwrap();
        assert!(matches!(quotient(&r, &p_right), Err(ConstructionError::NotTwoSided)));
        assert_eq!(ideal_product(&p, &p).unwrap(), p);
    }

    #[test]
    fn paper_examples() {
        let ii = builtin_example(PaperExample::TwoOneII).unwrap();
        assert_eq!(ii.order(), 4);
        for x in 1..4 {
            assert_eq!(ii.mul(x, 1), x);
            assert_eq!(ii.mul(x, 2), x);
            assert_eq!(ii.mul(x, 3), 0);
            assert_eq!(ii.add(x, x), 0);
        }
        let iii = builtin_example(PaperExample::TwoOneIII).unwrap();
        assert!(find_isomorphism(&iii, &ii).unwrap().is_some());
        let iv = builtin_example(PaperExample::TwoOneIV { p: 3 }).unwrap();
        assert_eq!(iv.add_table(), upper_triangular(3, 2, 64).unwrap().add_table());
        assert_eq!(iv.mul_table(), upper_triangular(3, 2, 64).unwrap().mul_table());
        assert_eq!(
            "ex-2-1-iv-zp(5)".parse::<PaperExample>().unwrap(),
            PaperExample::TwoOneIV { p: 5 }
        );
        assert!("ex-9".parse::<PaperExample>().is_err());
    }

    #[test]
    fn isomorphism_search() {
        assert!(
            find_isomorphism(&zmod(4), &direct_product(&zmod(2), &zmod(2), 64).unwrap().ring)
                .unwrap()
                .is_none()
        );
        assert!(
            find_isomorphism(&zmod(6), &direct_product(&zmod(2), &zmod(3), 64).unwrap().ring)
                .unwrap()
                .is_some()
        );
        assert!(find_isomorphism(&zmod(9), &zmod(9)).is_err());
    }
}
