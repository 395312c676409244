//! The forest `G(P(k))`.
//!
//! Every `S ∈ P(k)` outside `EI(k)` has the parent `Ψ_k(S) = S \ {β(S)}`,
//! so `P(k)` splits into trees rooted at the elements of `EI(k)`. The
//! children of a node `S` are the semigroups `S ∪ {x}` with
//! `β(S ∪ {x}) = x`; [`root_children`] and [`node_children`] select those `x`
//! among the special gaps without building the candidates first.
//!
//! Trees are expanded breadth first. Within one parent the children are
//! listed by decreasing added element under the chosen term order, and node
//! indices follow that traversal.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::positioned::PositionedContext;
use crate::{irreducible, CSemigroup, Class, Cone, Error, Result, TermOrder, Vector};

#[derive(Clone, Debug)]
pub struct ForestNode {
    pub semigroup: CSemigroup,
    /// `β(S)`, which is also the element added to the parent. `None` at roots.
    pub beta: Option<Vector>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub depth: usize,
}

/// A rooted tree `G(P_T(k))`; `nodes[0]` is the root and the rest follow
/// breadth-first order.
#[derive(Clone, Debug)]
pub struct Tree {
    nodes: Vec<ForestNode>,
}

impl Tree {
    /// Rebuilds a tree from `(semigroup, beta, parent)` triples listed in
    /// breadth-first order. The structure is checked; whether the nodes
    /// really form `G(P_T(k))` is not.
    pub fn from_parts(parts: Vec<(CSemigroup, Option<Vector>, Option<usize>)>) -> Result<Self> {
        let mut nodes: Vec<ForestNode> = Vec::with_capacity(parts.len());
        for (i, (semigroup, beta, parent)) in parts.into_iter().enumerate() {
            let depth = match (i, parent, beta) {
                (0, None, None) => 0,
                (0, _, _) => return Err(Error::PreconditionViolated("first node must be a root without beta")),
                (_, Some(p), Some(_)) if p < i && nodes[p].depth + 1 >= nodes[i - 1].depth => {
                    nodes[p].children.push(i);
                    nodes[p].depth + 1
                }
                _ => return Err(Error::PreconditionViolated("nodes must be in breadth-first order with a beta")),
            };
            nodes.push(ForestNode { semigroup, beta, parent, children: Vec::new(), depth });
        }
        if nodes.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(Tree { nodes })
    }

    pub fn root(&self) -> &ForestNode {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[ForestNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Elements added on the way from the root to node `i`.
    pub fn path(&self, mut i: usize) -> Vec<Vector> {
        let mut out = Vec::new();
        while let (Some(b), Some(p)) = (self.nodes[i].beta, self.nodes[i].parent) {
            out.push(b);
            i = p;
        }
        out.reverse();
        out
    }
}

#[derive(Clone, Debug)]
pub struct Forest {
    cone: Arc<Cone>,
    k: Vector,
    order: TermOrder,
    trees: Vec<Tree>,
}

impl Forest {
    /// Assembles a forest, rejecting trees that share a node.
    pub fn from_trees(cone: Arc<Cone>, k: Vector, order: TermOrder, trees: Vec<Tree>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for t in &trees {
            for n in &t.nodes {
                if !seen.insert(n.semigroup.gaps().to_vec()) {
                    return Err(Error::InternalInconsistency(format!("node {:?} occurs in two trees", n.semigroup)));
                }
            }
        }
        Ok(Forest { cone, k, order, trees })
    }

    pub fn cone(&self) -> &Arc<Cone> {
        &self.cone
    }

    pub fn k(&self) -> Vector {
        self.k
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn node_count(&self) -> usize {
        self.trees.iter().map(Tree::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Every node, tree by tree.
    pub fn semigroups(&self) -> impl Iterator<Item = &CSemigroup> {
        self.trees.iter().flat_map(|t| t.nodes.iter().map(|n| &n.semigroup))
    }

    /// Classification of a node, for reports.
    pub fn class_of(&self, s: &CSemigroup) -> Result<Class> {
        s.classify(&self.k)
    }
}

/// `SG(S) \ (M(S) ∪ Maximals(H(S)))`, the pool every child element is drawn
/// from.
fn candidates(s: &CSemigroup) -> Vec<Vector> {
    let m = s.m_set();
    let maxgaps = s.maximal_gaps();
    s.special_gaps().iter().filter(|x| !m.contains(x) && !maxgaps.contains(x)).copied().collect()
}

/// `S ∪ {x}` for each candidate, kept only when `x = β(S ∪ {x})`, sorted by
/// decreasing `x`. The candidate tests are necessary but not sufficient
/// away from the root: adding `x` can bring `y = k - x` into `B`, and if
/// `y ≻ x` the new semigroup belongs under `S ∪ {x} \ {y}` instead.
fn sorted_children(
    s: &CSemigroup,
    mut xs: Vec<Vector>,
    k: &Vector,
    order: &TermOrder,
    interval_len: usize,
) -> Result<Vec<(Vector, CSemigroup)>> {
    xs.sort_by(|a, b| order.cmp(b, a));
    let mut out = Vec::with_capacity(xs.len());
    for x in xs {
        let child = s.add_element(&x)?;
        let own = {
            let ctx = PositionedContext::with_interval_len(&child, *k, *order, interval_len);
            !ctx.b_set().is_empty() && ctx.beta()? == x
        };
        if own {
            out.push((x, child));
        }
    }
    Ok(out)
}

fn check_root(t: &CSemigroup, k: &Vector, order: &TermOrder) -> Result<usize> {
    if !t.contains(k)? {
        return Err(Error::NotARoot);
    }
    let ctx = PositionedContext::new(t, *k, *order)?;
    if !ctx.is_primary() || !ctx.b_set().is_empty() {
        return Err(Error::NotARoot);
    }
    Ok(ctx.interval_len())
}

/// Children of a root `T ∈ EI(k)`: `T ∪ {x}` for candidates with
/// `x ≻ k/2`, `3x = k` or `4x = k`. Sorted by decreasing `x`.
pub fn root_children(t: &CSemigroup, k: &Vector, order: &TermOrder) -> Result<Vec<(Vector, CSemigroup)>> {
    let interval_len = check_root(t, k, order)?;
    root_children_unchecked(t, k, order, interval_len)
}

fn root_children_unchecked(
    t: &CSemigroup,
    k: &Vector,
    order: &TermOrder,
    interval_len: usize,
) -> Result<Vec<(Vector, CSemigroup)>> {
    let xs =
        candidates(t).into_iter().filter(|x| order.above_half(x, k) || x.scale(3) == *k || x.scale(4) == *k).collect();
    sorted_children(t, xs, k, order, interval_len)
}

/// Children of a non-root node: `S ∪ {x}` for candidates with `x ≻ β(S)`,
/// or `x ≺ β(S)` and `y - x ∈ S` or `y = 2x` for every `y ∈ B(S)` above `x`,
/// and in either case `β(S ∪ {x}) = x`.
pub fn node_children(ctx: &PositionedContext<'_>) -> Result<Vec<(Vector, CSemigroup)>> {
    let beta = ctx.beta()?;
    node_children_with_beta(ctx, beta)
}

fn node_children_with_beta(ctx: &PositionedContext<'_>, beta: Vector) -> Result<Vec<(Vector, CSemigroup)>> {
    let s = ctx.semigroup();
    let order = ctx.order();
    let xs = candidates(s)
        .into_iter()
        .filter(|x| {
            order.gt(x, &beta)
                || ctx.b_set().iter().filter(|y| order.gt(y, x)).all(|y| s.diff_in(y, x) || *y == x.scale(2))
        })
        .collect();
    sorted_children(s, xs, &ctx.k(), order, ctx.interval_len())
}

/// `G(P_T(k))` for a root `T ∈ EI(k)`.
pub fn build_tree(root: CSemigroup, k: &Vector, order: &TermOrder) -> Result<Tree> {
    let interval_len = check_root(&root, k, order)?;
    let first = root_children_unchecked(&root, k, order, interval_len)?;
    let mut nodes = Vec::with_capacity(1 + first.len());
    nodes.push(ForestNode { semigroup: root, beta: None, parent: None, children: Vec::new(), depth: 0 });
    let mut queue = VecDeque::new();
    attach(&mut nodes, &mut queue, 0, first);
    while let Some(i) = queue.pop_front() {
        let beta = nodes[i].beta.expect("non-root node");
        let kids = {
            let ctx = PositionedContext::with_interval_len(&nodes[i].semigroup, *k, *order, interval_len);
            node_children_with_beta(&ctx, beta)?
        };
        attach(&mut nodes, &mut queue, i, kids);
    }
    Ok(Tree { nodes })
}

fn attach(nodes: &mut Vec<ForestNode>, queue: &mut VecDeque<usize>, parent: usize, kids: Vec<(Vector, CSemigroup)>) {
    let depth = nodes[parent].depth + 1;
    for (x, s) in kids {
        let id = nodes.len();
        nodes.push(ForestNode { semigroup: s, beta: Some(x), parent: Some(parent), children: Vec::new(), depth });
        nodes[parent].children.push(id);
        queue.push_back(id);
    }
}

/// `G(P(k))`: one tree per element of `EI(k)`, roots in canonical order.
pub fn build_forest(cone: &Arc<Cone>, k: &Vector, order: &TermOrder) -> Result<Forest> {
    let roots = irreducible::ei_set(cone, k)?;
    let trees = roots.into_iter().map(|t| build_tree(t, k, order)).collect::<Result<Vec<_>>>()?;
    Forest::from_trees(cone.clone(), *k, *order, trees)
}

/// One primary positioned semigroup for `k`.
///
/// None exists when `|I_C(k)|` is 2, 3 or 5, or 7 in an orthant. With two
/// points `k` is an atom of `C` and the only candidates `C` and `C \ {k}`
/// both miss the count.
///
/// For even `|I_C(k)|` the gaps are the `x ∈ I_C(k) \ {0}` with `2x ≺ k`.
/// For odd `|I_C(k)|` in `N^d` the gaps are those `x` with `2x ≺ k`, moved
/// by one step: the least `x = k/2 + e_i` in `I(k)` becomes a gap and
/// `k - x` becomes an element.
pub fn construct_primary(cone: &Arc<Cone>, k: &Vector, order: &TermOrder) -> Result<CSemigroup> {
    if !cone.contains(k)? {
        return Err(Error::NotInCone(*k));
    }
    if k.is_zero() {
        return Ok(CSemigroup::whole(cone.clone()));
    }
    let interval = cone.interval_unchecked(k);
    let n = interval.len();
    // in an orthant 7 = |I| forces k = 6e_i: genus 2, and neither <2,5> nor
    // <3,4,5> along that axis is primary positioned for 6
    if n == 2 || n == 3 || n == 5 || (n == 7 && cone.is_orthant()) {
        return Err(Error::NoPrimaryExists(*k));
    }
    let mut gaps: Vec<Vector> = interval.iter().filter(|x| !x.is_zero() && order.lt(&x.scale(2), k)).copied().collect();
    if let Some(half) = k.half().filter(|_| n % 2 == 1) {
        if !cone.is_orthant() {
            return Err(Error::OddCaseUnsupportedCone);
        }
        let x = order.min_of(
            (0..k.dim())
                .map(|i| half + Vector::unit(k.dim(), i))
                .filter(|y| y.le_componentwise(k))
                .collect::<Vec<_>>()
                .iter(),
        )?;
        let partner = k.checked_sub(&x).expect("x lies below k");
        gaps.retain(|g| *g != partner);
        gaps.push(x);
    }
    let s = CSemigroup::from_gaps(cone.clone(), &gaps)
        .map_err(|e| Error::InternalInconsistency(format!("construction for {k} is not closed: {e}")))?;
    if !s.primary_unchecked(k, n) {
        return Err(Error::InternalInconsistency(format!("construction for {k} is not primary positioned")));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::v;

    fn vs(xs: &[[u32; 2]]) -> Vec<Vector> {
        xs.iter().map(|x| v(x)).collect()
    }

    fn n(d: usize) -> Arc<Cone> {
        Arc::new(Cone::orthant(d).unwrap())
    }

    fn diag() -> Arc<Cone> {
        Arc::new(Cone::new(2, &[v(&[1, 0]), v(&[1, 1])]).unwrap())
    }

    #[rustfmt::skip]
    fn tree_root() -> CSemigroup {
        CSemigroup::from_gaps(
            diag(),
            &vs(&[
                [1, 1], [2, 2], [3, 3], [4, 4], [5, 5], [1, 0], [2, 1], [3, 2], [4, 3], [5, 4],
                [6, 5], [4, 2], [5, 3], [6, 4], [7, 5], [3, 0], [6, 3], [7, 4], [8, 4], [9, 5],
            ]),
        )
        .unwrap()
    }

    fn s6() -> CSemigroup {
        CSemigroup::from_gaps(n(2), &vs(&[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3]])).unwrap()
    }

    fn added(kids: &[(Vector, CSemigroup)]) -> Vec<Vector> {
        kids.iter().map(|(x, _)| *x).collect()
    }

    #[test]
    fn root_children_examples() {
        let g = TermOrder::grlex();
        assert_eq!(added(&root_children(&tree_root(), &v(&[11, 5]), &g).unwrap()), vs(&[[8, 4], [7, 4], [6, 3]]));
        assert_eq!(added(&root_children(&s6(), &v(&[2, 3]), &g).unwrap()), [v(&[1, 2])]);
        let s1 = CSemigroup::from_gaps(n(2), &vs(&[[0, 1], [0, 2], [0, 3], [1, 0], [1, 1]])).unwrap();
        assert!(root_children(&s1, &v(&[2, 3]), &g).unwrap().is_empty());
        let child = s6().add_element(&v(&[1, 2])).unwrap();
        assert_eq!(root_children(&child, &v(&[2, 3]), &g).unwrap_err(), Error::NotARoot);
    }

    #[test]
    #[rustfmt::skip]
    fn node_children_examples() {
        let g = TermOrder::grlex();
        let s = CSemigroup::from_gaps(
            n(2),
            &vs(&[
                [0, 1], [0, 2], [0, 3], [0, 4], [0, 5], [1, 0], [1, 1], [1, 2], [1, 3], [1, 4],
                [1, 5], [2, 2], [2, 3], [2, 4], [2, 5], [3, 0], [3, 3], [3, 4], [4, 5],
            ]),
        )
        .unwrap();
        let ctx = PositionedContext::new(&s, v(&[6, 5]), g).unwrap();
        let mut got = added(&node_children(&ctx).unwrap());
        got.sort();
        assert_eq!(got, vs(&[[2, 2], [2, 3]]));

        let k = v(&[11, 5]);
        let t11 = tree_root().add_element(&v(&[8, 4])).unwrap().add_element(&v(&[5, 3])).unwrap();
        let ctx = PositionedContext::new(&t11, k, g).unwrap();
        assert_eq!(added(&node_children(&ctx).unwrap()), vs(&[[7, 4], [6, 3]]));
        let t21 = tree_root().add_element(&v(&[7, 4])).unwrap().add_element(&v(&[8, 4])).unwrap();
        let ctx = PositionedContext::new(&t21, k, g).unwrap();
        assert!(node_children(&ctx).unwrap().is_empty());

        let root = tree_root();
        let ctx = PositionedContext::new(&root, k, g).unwrap();
        assert_eq!(node_children(&ctx).unwrap_err(), Error::EmptyBSet);
    }

    #[test]
    #[rustfmt::skip]
    fn candidate_above_beta_can_lose_to_its_complement() {
        // x = (5,3) passes x ≻ β(S) but brings k - x = (6,2) into B
        let g = TermOrder::grlex();
        let k = v(&[11, 5]);
        let s = CSemigroup::from_gaps(
            diag(),
            &vs(&[
                [1, 0], [1, 1], [2, 0], [2, 1], [3, 0], [3, 1], [4, 0], [5, 0], [3, 3], [4, 2],
                [6, 0], [4, 3], [5, 2], [6, 1], [7, 1], [7, 4], [9, 3], [5, 3],
            ]),
        )
        .unwrap();
        let x = v(&[5, 3]);
        let ctx = PositionedContext::new(&s, k, g).unwrap();
        assert!(ctx.is_primary());
        assert_eq!(ctx.beta().unwrap(), v(&[5, 1]));
        assert!(g.gt(&x, &ctx.beta().unwrap()));
        assert!(candidates(&s).contains(&x));

        let bigger = s.add_element(&x).unwrap();
        let up = PositionedContext::new(&bigger, k, g).unwrap();
        assert_eq!(up.b_set(), vs(&[[3, 2], [5, 1], [5, 3], [6, 2]]));
        assert_eq!(up.beta().unwrap(), v(&[6, 2]));
        assert!(!added(&node_children(&ctx).unwrap()).contains(&x));
        let parent = up.psi().unwrap();
        let ctx = PositionedContext::new(&parent, k, g).unwrap();
        assert!(added(&node_children(&ctx).unwrap()).contains(&v(&[6, 2])));
    }

    #[test]
    fn tree_of_eleven_five() {
        let tree = build_tree(tree_root(), &v(&[11, 5]), &TermOrder::grlex()).unwrap();
        let paths: Vec<Vec<Vector>> = (0..tree.len()).map(|i| tree.path(i)).collect();
        let expected: Vec<Vec<Vector>> = [
            &[][..],
            &[[8, 4]],
            &[[7, 4]],
            &[[6, 3]],
            &[[8, 4], [5, 3]],
            &[[8, 4], [4, 2]],
            &[[7, 4], [8, 4]],
            &[[6, 3], [8, 4]],
            &[[6, 3], [7, 4]],
            &[[8, 4], [5, 3], [7, 4]],
            &[[8, 4], [5, 3], [6, 3]],
            &[[8, 4], [4, 2], [7, 4]],
            &[[8, 4], [4, 2], [6, 3]],
            &[[6, 3], [7, 4], [8, 4]],
            &[[8, 4], [5, 3], [6, 3], [7, 4]],
            &[[8, 4], [4, 2], [6, 3], [7, 4]],
        ]
        .iter()
        .map(|p| vs(p))
        .collect();
        assert_eq!(paths, expected);
        for (i, node) in tree.nodes().iter().enumerate().skip(1) {
            let parent = &tree.nodes()[node.parent.unwrap()];
            assert_eq!(parent.semigroup.genus(), node.semigroup.genus() + 1);
            let ctx = PositionedContext::new(&node.semigroup, v(&[11, 5]), TermOrder::grlex()).unwrap();
            assert_eq!(ctx.beta(), Ok(node.beta.unwrap()), "node {i}");
            assert_eq!(ctx.psi().unwrap(), parent.semigroup);
        }

        let shape = |t: &Tree| t.nodes().iter().map(|n| (n.children.clone(), n.depth)).collect::<Vec<_>>();
        let parts: Vec<_> = tree.nodes().iter().map(|n| (n.semigroup.clone(), n.beta, n.parent)).collect();
        assert_eq!(shape(&Tree::from_parts(parts.clone()).unwrap()), shape(&tree));
        let mut shuffled = parts;
        shuffled.swap(1, 5);
        assert!(Tree::from_parts(shuffled).is_err());
        assert_eq!(Tree::from_parts(Vec::new()).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn forest_of_two_three() {
        let f = build_forest(&n(2), &v(&[2, 3]), &TermOrder::grlex()).unwrap();
        assert_eq!(f.trees().len(), 12);
        assert_eq!(f.node_count(), 13);
        let big: Vec<&Tree> = f.trees().iter().filter(|t| t.len() > 1).collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].root().semigroup, s6());
        assert_eq!(big[0].nodes()[1].semigroup, s6().add_element(&v(&[1, 2])).unwrap());
    }

    #[test]
    fn empty_forests() {
        let g = TermOrder::grlex();
        for k in [v(&[2, 0]), v(&[0, 4])] {
            assert!(build_forest(&n(2), &k, &g).unwrap().is_empty());
        }
        let c = Arc::new(Cone::new(2, &[v(&[1, 0]), v(&[1, 2])]).unwrap());
        assert!(build_forest(&c, &v(&[2, 2]), &g).unwrap().is_empty());
        let zero = build_forest(&n(2), &v(&[0, 0]), &g).unwrap();
        assert_eq!(zero.node_count(), 1);
    }

    #[test]
    fn construction() {
        let g = TermOrder::grlex();
        let s = construct_primary(&n(2), &v(&[2, 2]), &g).unwrap();
        assert_eq!(s.is_primary_positioned(&v(&[2, 2])), Ok(true));
        assert_eq!(construct_primary(&n(2), &v(&[4, 0]), &g).unwrap_err(), Error::NoPrimaryExists(v(&[4, 0])));
        let t = construct_primary(&n(1), &v(&[7]), &g).unwrap();
        assert_eq!(t.gaps(), &[v(&[1]), v(&[2]), v(&[3])]);
        assert_eq!(construct_primary(&diag(), &v(&[4, 2]), &g).unwrap_err(), Error::OddCaseUnsupportedCone);
        for k in [v(&[6, 0]), v(&[0, 6])] {
            assert_eq!(construct_primary(&n(2), &k, &g).unwrap_err(), Error::NoPrimaryExists(k));
        }
        for o in [TermOrder::lex(), TermOrder::grevlex(), g] {
            for k in v(&[6, 6]).box_points() {
                let bad = vs(&[[1, 0], [0, 1], [2, 0], [0, 2], [4, 0], [0, 4], [6, 0], [0, 6]]);
                match construct_primary(&n(2), &k, &o) {
                    Ok(s) => assert!(s.is_primary_positioned(&k).unwrap()),
                    Err(e) => assert!(bad.contains(&k) && e == Error::NoPrimaryExists(k), "{k}: {e}"),
                }
            }
        }
    }
}
