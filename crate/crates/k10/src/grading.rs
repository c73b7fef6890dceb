//! Grading machinery: the torus-weight decomposition of K10, pushforwards of
//! the weight lattice along homomorphisms `Z^2 -> G` (these cover every toral
//! grading), simultaneous eigenspace decompositions for commuting
//! automorphism matrices (these cover the nontoral ones), and the grading
//! axioms: direct sum, closure, super-compatibility, support generation.

use once_cell::sync::Lazy;

use crate::abgroup::{AbGroup, Factor, GroupElem};
use crate::algebra::{SuperAlgebra, TENSOR_WEIGHTS};
use crate::cyclo::{rational_string, CycNum};
use crate::linalg::{eigenspace_within, unit_vector, Matrix, Subspace};
use crate::report::{Report, ReportBuilder};
use crate::Error;

/// Exponent pair `(a, b)`: the torus element `t_{l,m}` scales the weight
/// space by `l^a m^b`.
pub type Weight = (i64, i64);

/// A `G`-grading of an algebra: components indexed by group elements, each a
/// subspace in canonical form. Components are kept sorted by label, so two
/// gradings are equal iff they agree exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub algebra: String,
    pub group: AbGroup,
    components: Vec<(GroupElem, Subspace)>,
}

impl Grading {
    pub fn new(algebra: impl Into<String>, group: AbGroup, mut components: Vec<(GroupElem, Subspace)>) -> Self {
        components.retain(|(_, s)| s.dim() > 0);
        components.sort_by(|a, b| a.0.cmp(&b.0));
        Grading {
            algebra: algebra.into(),
            group,
            components,
        }
    }

    pub fn components(&self) -> &[(GroupElem, Subspace)] {
        &self.components
    }

    pub fn support(&self) -> Vec<GroupElem> {
        self.components.iter().map(|(g, _)| g.clone()).collect()
    }

    pub fn component(&self, label: &GroupElem) -> Option<&Subspace> {
        self.components
            .iter()
            .find(|(g, _)| g == label)
            .map(|(_, s)| s)
    }

    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|(_, s)| s.dim()).sum()
    }

    /// Same components regardless of how they are labeled.
    pub fn same_components(&self, other: &Grading) -> bool {
        self.components.len() == other.components.len()
            && self.components.iter().all(|(_, s)| {
                other.components.iter().any(|(_, t)| s == t)
            })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let components: Vec<serde_json::Value> = self
            .components
            .iter()
            .map(|(g, s)| {
                let basis: Vec<Vec<String>> = s
                    .basis()
                    .iter()
                    .map(|v| {
                        v.iter()
                            .map(|c| {
                                c.as_rational()
                                    .map(rational_string)
                                    .unwrap_or_else(|| c.to_string())
                            })
                            .collect()
                    })
                    .collect();
                serde_json::json!({ "label": g, "basis": basis })
            })
            .collect();
        serde_json::json!({
            "group": {
                "label": self.group.label(),
                "free_rank": self.group.free_rank(),
                "torsion": self.group.torsion(),
            },
            "components": components,
        })
    }
}

/// Dimension census `(n_1, ..., n_k)`: `n_i` components of dimension `i`,
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingType(pub Vec<usize>);

impl std::fmt::Display for GradingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

pub fn grading_type(g: &Grading) -> GradingType {
    let mut counts: Vec<usize> = Vec::new();
    for (_, s) in g.components() {
        let d = s.dim();
        if d == 0 {
            continue;
        }
        if counts.len() < d {
            counts.resize(d, 0);
        }
        counts[d - 1] += 1;
    }
    GradingType(counts)
}

/// Multiset of `(even dim, odd dim)` pairs over the components, sorted.
pub fn parity_refined_type(alg: &SuperAlgebra, g: &Grading) -> Vec<(usize, usize)> {
    let even = alg.even_indices();
    let odd = alg.odd_indices();
    let mut out: Vec<(usize, usize)> = g
        .components()
        .iter()
        .map(|(_, s)| {
            (
                s.intersect_coordinates(&even).dim(),
                s.intersect_coordinates(&odd).dim(),
            )
        })
        .collect();
    out.sort();
    out
}

/// The nine weight spaces of the tensor basis under the maximal torus, in
/// order of first appearance along the basis.
pub fn weight_decomposition() -> Vec<(Weight, Subspace)> {
    let mut out: Vec<(Weight, Vec<Vec<CycNum>>)> = Vec::new();
    for (i, w) in TENSOR_WEIGHTS.iter().enumerate() {
        let v = unit_vector(10, i);
        if let Some(entry) = out.iter_mut().find(|(ww, _)| ww == w) {
            entry.1.push(v);
        } else {
            out.push((*w, vec![v]));
        }
    }
    out.into_iter()
        .map(|(w, vs)| (w, Subspace::span(10, vs)))
        .collect()
}

/// Pushforward of the weight grading along the homomorphism `Z^2 -> G`
/// sending the standard generators to `images`.
pub fn grading_from_hom(group: &AbGroup, images: &[GroupElem; 2]) -> Grading {
    let mut merged: Vec<(GroupElem, Vec<Vec<CycNum>>)> = Vec::new();
    for ((a, b), space) in weight_decomposition() {
        let label = group.add(
            &group.scalar_mul(a, &images[0]),
            &group.scalar_mul(b, &images[1]),
        );
        let vectors = space.basis().to_vec();
        if let Some(entry) = merged.iter_mut().find(|(g, _)| *g == label) {
            entry.1.extend(vectors);
        } else {
            merged.push((label, vectors));
        }
    }
    Grading::new(
        "k10_tensor",
        group.clone(),
        merged
            .into_iter()
            .map(|(g, vs)| (g, Subspace::span(10, vs)))
            .collect(),
    )
}

static ZETA_POWERS: Lazy<Vec<CycNum>> =
    Lazy::new(|| (0..120).map(CycNum::zeta_pow).collect());

fn zeta_exponent(c: &CycNum) -> Option<i64> {
    ZETA_POWERS.iter().position(|z| z == c).map(|k| k as i64)
}

/// Simultaneous eigenspace decomposition for a list of pairwise commuting
/// matrices. Eigenvalue candidates are the 120th roots of unity (all
/// automorphisms in scope have order dividing 120); diagonal matrices use
/// their own diagonal entries as a fast path. Labels live in the product of
/// cyclic groups generated by each matrix's eigenvalues.
pub fn eigenspace_decomposition(mats: &[Matrix]) -> Result<Grading, Error> {
    let n = mats.first().map_or(10, Matrix::nrows);
    for m in mats {
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::AlgebraMismatch);
        }
    }
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::NotCommuting);
            }
        }
    }
    let mut parts: Vec<(Vec<i64>, Subspace)>;
    if mats.iter().all(|m| m.is_diagonal()) {
        // fast path: components are coordinate spans grouped by the tuple of
        // diagonal entries
        let mut grouped: Vec<(Vec<i64>, Vec<usize>)> = Vec::new();
        for i in 0..n {
            let mut exps = Vec::with_capacity(mats.len());
            for m in mats {
                exps.push(zeta_exponent(&m[(i, i)]).ok_or(Error::NotDiagonalizable)?);
            }
            if let Some(entry) = grouped.iter_mut().find(|(e, _)| *e == exps) {
                entry.1.push(i);
            } else {
                grouped.push((exps, vec![i]));
            }
        }
        parts = grouped
            .into_iter()
            .map(|(e, idxs)| {
                let vs = idxs.into_iter().map(|i| unit_vector(n, i)).collect();
                (e, Subspace::span(n, vs))
            })
            .collect();
    } else {
        // iterative refinement; track the eigenvalue exponent per matrix
        let full = Subspace::span(n, (0..n).map(|i| unit_vector(n, i)).collect());
        parts = vec![(Vec::new(), full)];
        for m in mats {
            let candidates: Vec<i64> = if m.is_diagonal() {
                let mut exps = Vec::new();
                for i in 0..n {
                    let k = zeta_exponent(&m[(i, i)]).ok_or(Error::NotDiagonalizable)?;
                    if !exps.contains(&k) {
                        exps.push(k);
                    }
                }
                exps
            } else {
                (0..120).collect()
            };
            let mut next = Vec::new();
            for (exps, space) in &parts {
                let mut found = 0;
                for &k in &candidates {
                    let eig = eigenspace_within(m, &ZETA_POWERS[k as usize], space)?;
                    if eig.dim() > 0 {
                        found += eig.dim();
                        let mut e = exps.clone();
                        e.push(k);
                        next.push((e, eig));
                        if found == space.dim() {
                            break;
                        }
                    }
                }
            }
            parts = next;
        }
    }
    if parts.iter().map(|(_, s)| s.dim()).sum::<usize>() != n {
        return Err(Error::NotDiagonalizable);
    }
    // group label: one cyclic factor per matrix, of order lcm of the
    // eigenvalue orders; trivial factors are dropped
    let mut orders: Vec<i64> = Vec::new();
    for j in 0..mats.len() {
        let mut order = 1i64;
        for (exps, _) in &parts {
            let k = exps[j];
            let o = 120 / num_integer::gcd(k, 120);
            order = num_integer::lcm(order, o.max(1));
        }
        orders.push(order);
    }
    let kept: Vec<usize> = (0..mats.len()).filter(|&j| orders[j] > 1).collect();
    let group = AbGroup::new(
        kept.iter()
            .map(|&j| Factor::Cyclic(orders[j] as u64))
            .collect(),
    );
    let components = parts
        .into_iter()
        .map(|(exps, s)| {
            let label: GroupElem = kept
                .iter()
                .map(|&j| (exps[j] * orders[j] / 120).rem_euclid(orders[j]))
                .collect();
            (label, s)
        })
        .collect();
    Ok(Grading::new("k10_tensor", group, components))
}

/// Refine an existing grading by the eigenspaces of one more automorphism of
/// finite order `order` that preserves every component: the group gains a
/// `Z_order` coordinate holding the eigenvalue exponent.
pub fn refine_by_automorphism(g: &Grading, m: &Matrix, order: u64) -> Result<Grading, Error> {
    let mut factors = g.group.factors().to_vec();
    factors.push(Factor::Cyclic(order));
    let group = AbGroup::new(factors);
    let step = 120 / order as i64;
    let mut components = Vec::new();
    for (label, space) in g.components() {
        let mut found = 0;
        for k in 0..order as i64 {
            let eig = eigenspace_within(m, &ZETA_POWERS[(k * step) as usize], space)?;
            if eig.dim() > 0 {
                found += eig.dim();
                let mut l = label.clone();
                l.push(k);
                components.push((l, eig));
            }
        }
        if found != space.dim() {
            return Err(Error::NotDiagonalizable);
        }
    }
    Ok(Grading::new(g.algebra.clone(), group, components))
}

/// Check the four grading axioms: direct sum, closure `J^g J^h <= J^{g+h}`,
/// compatibility with the even/odd split, and generation of the group by the
/// support.
pub fn verify_grading(alg: &SuperAlgebra, g: &Grading) -> Report {
    let mut rb = ReportBuilder::new(format!("{}: grading axioms over {}", alg.id(), g.group.label()));
    let n = alg.dim();

    // direct sum
    let total = g.total_dim();
    rb.check_eq("component dimensions sum to algebra dimension", n, total);
    let mut all_vectors: Vec<Vec<CycNum>> = Vec::new();
    for (_, s) in g.components() {
        all_vectors.extend(s.basis().to_vec());
    }
    let indep = crate::linalg::independent(&all_vectors);
    rb.check("components are independent", "true", indep.to_string(), indep);

    // closure
    for (gl, gs) in g.components() {
        for (hl, hs) in g.components() {
            let target_label = g.group.add(gl, hl);
            let target = g.component(&target_label);
            for u in gs.basis() {
                for v in hs.basis() {
                    let p = alg.product_coords(u, v);
                    let ok = match target {
                        Some(t) => t.contains(&p),
                        None => p.iter().all(|c| c.is_zero()),
                    };
                    rb.assert_that(ok, || {
                        format!(
                            "closure fails: J^{:?} J^{:?} escapes J^{:?}",
                            gl, hl, target_label
                        )
                    });
                }
            }
        }
    }

    // super-compatibility: each component is (component meet even) + (component meet odd)
    let even = alg.even_indices();
    let odd = alg.odd_indices();
    for (gl, s) in g.components() {
        let split = s.intersect_coordinates(&even).dim() + s.intersect_coordinates(&odd).dim();
        rb.assert_that(split == s.dim(), || {
            format!("component J^{:?} does not split into even and odd parts", gl)
        });
    }

    // support generates the group
    let generates = g.group.generated_by(&g.support());
    rb.check(
        "support generates the group",
        "true",
        generates.to_string(),
        generates,
    );
    rb.finish()
}

/// Is every component of `coarse` a direct sum of components of `fine`?
pub fn is_refinement(fine: &Grading, coarse: &Grading) -> bool {
    if fine.algebra != coarse.algebra {
        return false;
    }
    coarse.components().iter().all(|(_, c)| {
        let inside: Vec<&Subspace> = fine
            .components()
            .iter()
            .map(|(_, s)| s)
            .filter(|s| c.contains_subspace(s))
            .collect();
        inside.iter().map(|s| s.dim()).sum::<usize>() == c.dim()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::k10_tensor;
    use crate::autos::{AutElement, ToralParam};
    use crate::cyclo::RootSpec;

    fn zeta(k: i64, n: i64) -> RootSpec {
        RootSpec::new(k, n).unwrap()
    }

    fn tensor_index(name: &str) -> usize {
        k10_tensor().basis_index(name).unwrap()
    }

    #[test]
    fn weight_spaces() {
        let ws = weight_decomposition();
        assert_eq!(ws.len(), 9);
        let total: usize = ws.iter().map(|(_, s)| s.dim()).sum();
        assert_eq!(total, 10);
        // x(x)e has weight (1, 0), a one-dimensional space
        let (w, s) = ws.iter().find(|(w, _)| *w == (1, 0)).unwrap();
        assert_eq!(*w, (1, 0));
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&unit_vector(10, tensor_index("x⊗e"))));
        // the (0,0) space is two-dimensional
        let (_, s) = ws.iter().find(|(w, _)| *w == (0, 0)).unwrap();
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn identity_hom_gives_the_fine_toral_grading() {
        let g = grading_from_hom(&AbGroup::free(2), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(g.components().len(), 9);
        assert_eq!(grading_type(&g), GradingType(vec![8, 1]));
        assert!(verify_grading(&k10_tensor(), &g).passed());
    }

    #[test]
    fn mod3_pushforward_matches_the_listed_component() {
        let g = grading_from_hom(&AbGroup::cyclic(3), &[vec![1], vec![1]]);
        // the omega component is spanned by y(x)y, e(x)x, x(x)e
        let comp = g.component(&vec![1]).unwrap();
        assert_eq!(comp.dim(), 3);
        for name in ["y⊗y", "e⊗x", "x⊗e"] {
            assert!(comp.contains(&unit_vector(10, tensor_index(name))));
        }
        assert_eq!(grading_type(&g), GradingType(vec![0, 0, 2, 1]));
    }

    #[test]
    fn mod5_pushforward_matches_the_listed_component() {
        let g = grading_from_hom(&AbGroup::cyclic(5), &[vec![1], vec![2]]);
        let comp = g.component(&vec![4]).unwrap();
        assert_eq!(comp.dim(), 2);
        for name in ["x⊗y", "y⊗e"] {
            assert!(comp.contains(&unit_vector(10, tensor_index(name))));
        }
        assert_eq!(grading_type(&g), GradingType(vec![0, 5]));
    }

    #[test]
    fn eigenspace_matches_pushforward_for_a_toral_generator() {
        let t = ToralParam::new(zeta(1, 3), zeta(1, 3));
        let eig = eigenspace_decomposition(&[t.matrix()]).unwrap();
        let push = grading_from_hom(&AbGroup::cyclic(3), &[vec![1], vec![1]]);
        assert_eq!(eig, push);
    }

    #[test]
    fn delta_eigenspaces() {
        let g = eigenspace_decomposition(&[AutElement::delta().matrix()]).unwrap();
        assert_eq!(g.group, AbGroup::cyclic(2));
        let plus = g.component(&vec![0]).unwrap();
        assert_eq!(plus.dim(), 5);
        let idx = |n: &str| tensor_index(n);
        // 1, e(x)e, x(x)y - y(x)x, e(x)x + x(x)e, e(x)y + y(x)e
        assert!(plus.contains(&unit_vector(10, idx("1"))));
        assert!(plus.contains(&unit_vector(10, idx("e⊗e"))));
        let mut v = vec![CycNum::zero(); 10];
        v[idx("x⊗y")] = CycNum::one();
        v[idx("y⊗x")] = -&CycNum::one();
        assert!(plus.contains(&v));
        let mut v = vec![CycNum::zero(); 10];
        v[idx("e⊗x")] = CycNum::one();
        v[idx("x⊗e")] = CycNum::one();
        assert!(plus.contains(&v));
        assert_eq!(grading_type(&g), GradingType(vec![0, 0, 0, 0, 2]));
        assert!(verify_grading(&k10_tensor(), &g).passed());
    }

    #[test]
    fn identity_matrix_gives_the_trivial_grading() {
        let g = eigenspace_decomposition(&[Matrix::identity(10)]).unwrap();
        assert_eq!(g.group, AbGroup::trivial());
        assert_eq!(g.components().len(), 1);
        assert_eq!(g.components()[0].1.dim(), 10);
    }

    #[test]
    fn noncommuting_matrices_are_rejected() {
        let t = ToralParam::new(zeta(1, 4), zeta(0, 1)).matrix();
        let d = AutElement::delta().matrix();
        assert!(matches!(
            eigenspace_decomposition(&[t, d]),
            Err(Error::NotCommuting)
        ));
    }

    #[test]
    fn non_diagonalizable_matrix_is_rejected() {
        let mut m = Matrix::identity(10);
        m[(0, 1)] = CycNum::one();
        assert!(matches!(
            eigenspace_decomposition(&[m]),
            Err(Error::NotDiagonalizable)
        ));
    }

    #[test]
    fn closure_negative_control() {
        // swap two labels of the mod-4 pushforward: closure must fail
        let g = grading_from_hom(&AbGroup::cyclic(4), &[vec![1], vec![1]]);
        let mut comps: Vec<(GroupElem, Subspace)> = g.components().to_vec();
        let i2 = comps.iter().position(|(l, _)| l == &vec![2]).unwrap();
        let i3 = comps.iter().position(|(l, _)| l == &vec![3]).unwrap();
        let tmp = comps[i2].0.clone();
        comps[i2].0 = comps[i3].0.clone();
        comps[i3].0 = tmp;
        let bad = Grading::new("k10_tensor", AbGroup::cyclic(4), comps);
        assert!(!verify_grading(&k10_tensor(), &bad).passed());
    }

    #[test]
    fn pushforward_functoriality() {
        // Z^2 -> Z, (a, b) -> a + b, then Z -> Z3
        let fine = grading_from_hom(&AbGroup::free(1), &[vec![1], vec![1]]);
        let coarse = grading_from_hom(&AbGroup::cyclic(3), &[vec![1], vec![1]]);
        assert!(is_refinement(&fine, &coarse));
        // and the universal weight grading refines both
        let top = grading_from_hom(&AbGroup::free(2), &[vec![1, 0], vec![0, 1]]);
        assert!(is_refinement(&top, &fine));
        assert!(is_refinement(&top, &coarse));
        assert!(!is_refinement(&coarse, &top));
    }

    #[test]
    fn parity_refined_types_distinguish_equal_types() {
        let alg = k10_tensor();
        // (a+b) mod 2 vs a mod 2: both of type (0,0,0,1,0,1)
        let g3 = grading_from_hom(&AbGroup::cyclic(2), &[vec![1], vec![1]]);
        let g7 = grading_from_hom(&AbGroup::cyclic(2), &[vec![1], vec![0]]);
        assert_eq!(grading_type(&g3), grading_type(&g7));
        let p3 = parity_refined_type(&alg, &g3);
        let p7 = parity_refined_type(&alg, &g7);
        assert_ne!(p3, p7);
        assert_eq!(p3, vec![(0, 4), (6, 0)]);
        assert_eq!(p7, vec![(2, 2), (4, 2)]);
    }

    #[test]
    fn types_are_invariant_under_commuting_automorphisms() {
        // conjugating a grading's components by an automorphism commuting
        // with its generator preserves the type
        let t = ToralParam::new(zeta(1, 4), zeta(1, 4));
        let g = eigenspace_decomposition(&[t.matrix()]).unwrap();
        let m = ToralParam::new(zeta(1, 5), zeta(1, 5)).matrix();
        let moved: Vec<(GroupElem, Subspace)> = g
            .components()
            .iter()
            .map(|(l, s)| {
                let vs = s.basis().iter().map(|v| m.apply(v)).collect();
                (l.clone(), Subspace::span(10, vs))
            })
            .collect();
        let h = Grading::new("k10_tensor", g.group.clone(), moved);
        assert_eq!(grading_type(&g), grading_type(&h));
        assert!(verify_grading(&k10_tensor(), &h).passed());
    }
}
