//! Constructors for the edge ideals cut out of the 2 x n Hankel matrix,
//! the combinatorially predicted answers for closed labelings, and the
//! certificates tying graph structure to ideal structure.

use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{clique_intervals, CliqueIntervals, LabeledGraph};
use crate::groebner::{
    buchberger, graded_dim_ideal, ideal_equal, intersect, radical_membership, Ideal,
};
use crate::monomial_ideal::{binomial, MonomialIdeal};
use crate::ring::{Coefficient, Monomial, MonomialOrder, PolyRing, Polynomial};

/// The 2-minor of the Hankel matrix on columns `i < j`, in the display
/// sign convention `x_i x_{j+1} - x_j x_{i+1}` (1-based vertices).
pub fn edge_minor(ring: &PolyRing, i: usize, j: usize) -> Polynomial {
    debug_assert!(1 <= i && i < j && j < ring.num_vars());
    let nv = ring.num_vars();
    let pos = Monomial::var(nv, i - 1).mul(&Monomial::var(nv, j));
    let neg = Monomial::var(nv, j - 1).mul(&Monomial::var(nv, i));
    Polynomial::from_terms(
        nv,
        [
            (pos, Coefficient::one()),
            (neg, -Coefficient::one()),
        ],
    )
}

/// Same minor stored monic under graded revlex: leading monomial
/// `x_j x_{i+1}` with coefficient +1.
pub fn edge_minor_monic(ring: &PolyRing, i: usize, j: usize) -> Polynomial {
    edge_minor(ring, i, j)
        .make_monic(MonomialOrder::GradedRevLex)
        .expect("minors are nonzero")
}

/// The ideal with one Hankel 2-minor per edge of the graph, generators
/// monic under revlex, in edge order.
pub fn scroll_edge_ideal(g: &LabeledGraph) -> Ideal {
    let ring = PolyRing::for_vertices(g.num_vertices());
    let gens = g
        .edges()
        .iter()
        .map(|&(i, j)| edge_minor_monic(&ring, i, j))
        .collect();
    Ideal::new(ring.num_vars(), gens)
}

/// The ideal of all 2-minors (the rational normal curve of degree `n`);
/// identical to the edge ideal of the complete graph.
pub fn scroll_full_ideal(n: usize) -> Result<Ideal> {
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "the full minor ideal needs n >= 2, got {n}"
        )));
    }
    Ok(scroll_edge_ideal(&LabeledGraph::complete(n)))
}

/// The variable ideal `(x_2, ..., x_n)` in the ring on `n + 1` variables.
pub fn middle_variable_ideal(n: usize) -> Ideal {
    let ring = PolyRing::for_vertices(n);
    Ideal::new(ring.num_vars(), (1..n).map(|i| ring.var(i)).collect())
}

/// The predicted revlex initial ideal of a closed labeling with interval
/// facets `[a_i, b_i]`: the sum of the squares `(x_{a_i+1}, ..., x_{b_i})^2`.
pub fn predicted_initial_ideal(ci: &CliqueIntervals, n: usize) -> MonomialIdeal {
    let nv = n + 1;
    let mut acc = MonomialIdeal::zero(nv);
    for &(a, b) in ci.intervals() {
        if b > a {
            // interval [a, b] contributes squares in variables a+1 ..= b
            acc = acc.sum(&MonomialIdeal::interval_square(nv, a, b - 1));
        }
    }
    acc
}

/// A verified multiplier certificate for the saturation containment: the
/// expansion of `combination` equals `multiplier * minor(i, j)` exactly.
#[derive(Debug, Clone)]
pub struct SaturationCertificate {
    /// vertex sequence from i to j inside the graph
    pub path: Vec<usize>,
    pub multiplier: Monomial,
    /// pairs (polynomial coefficient, edge) over the edge generators
    pub combination: Vec<(Polynomial, (usize, usize))>,
}

impl SaturationCertificate {
    /// Re-expand the combination and compare against `multiplier * d_ij`.
    pub fn verify(&self, ring: &PolyRing) -> Result<bool> {
        let (i, j) = (
            *self.path.first().expect("path nonempty"),
            *self.path.last().expect("path nonempty"),
        );
        let target = edge_minor(ring, i.min(j), i.max(j))
            .mul_term(&self.multiplier, &Coefficient::one());
        let mut acc = Polynomial::zero(ring.num_vars());
        for (coeff, (a, b)) in &self.combination {
            acc = acc.add(&coeff.mul(&edge_minor(ring, *a, *b))?)?;
        }
        Ok(acc == target)
    }
}

/// Build the saturation certificate for a pair `i < j` in a connected
/// graph, following the path recursion: with `p` the next-to-last vertex
/// of a shortest path, `x_{p+1} d_{ij} = x_{j+1} d_{ip} + x_{i+1} d_{pj}`.
/// The multiplier is the product of `x_{v+1}` over interior path vertices.
pub fn saturation_certificate(
    g: &LabeledGraph,
    i: usize,
    j: usize,
) -> Result<SaturationCertificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !(1 <= i && i < j && j <= g.num_vertices()) {
        return Err(Error::InvalidInput(format!(
            "need 1 <= i < j <= n, got ({i}, {j})"
        )));
    }
    let ring = PolyRing::for_vertices(g.num_vertices());
    let path = g.shortest_path(i, j).ok_or(Error::Disconnected)?;
    let (multiplier, combination) = certificate_rec(g, &ring, &path)?;
    Ok(SaturationCertificate {
        path,
        multiplier,
        combination,
    })
}

/// Pairs (polynomial coefficient, edge) making up a certificate combination.
type MinorCombination = Vec<(Polynomial, (usize, usize))>;

/// Certificate for the (possibly reversed) pair at the ends of `path`,
/// expressing `multiplier * d_{path[0], path[last]}` over edge minors.
fn certificate_rec(
    g: &LabeledGraph,
    ring: &PolyRing,
    path: &[usize],
) -> Result<(Monomial, MinorCombination)> {
    let nv = ring.num_vars();
    let u = path[0];
    let v = *path.last().expect("path nonempty");
    if path.len() == 2 {
        debug_assert!(g.has_edge(u, v));
        // d_{uv} = sign * minor(min, max)
        let sign = if u < v {
            Coefficient::one()
        } else {
            -Coefficient::one()
        };
        let coeff = Polynomial::from_term(nv, Monomial::one(nv), sign);
        return Ok((Monomial::one(nv), vec![(coeff, (u.min(v), u.max(v)))]));
    }
    let p = path[path.len() - 2];
    // x_{p+1} d_{uv} = x_{v+1} d_{up} + x_{u+1} d_{pv}
    let (m_up, combo_up) = certificate_rec(g, ring, &path[..path.len() - 1])?;
    let x_p1 = Monomial::var(nv, p); // x_{p+1} is index p (0-based)
    let x_v1 = Monomial::var(nv, v);
    let x_u1 = Monomial::var(nv, u);
    let multiplier = m_up.mul(&x_p1);

    let mut combination: Vec<(Polynomial, (usize, usize))> = combo_up
        .into_iter()
        .map(|(c, e)| (c.mul_term(&x_v1, &Coefficient::one()), e))
        .collect();
    let sign_pv = if p < v {
        Coefficient::one()
    } else {
        -Coefficient::one()
    };
    let last_coeff =
        Polynomial::from_term(nv, m_up.mul(&x_u1), sign_pv);
    combination.push((last_coeff, (p.min(v), p.max(v))));
    Ok((multiplier, combination))
}

/// Predicted minimal primes over a connected closed labeling: the full
/// minor ideal alone for the complete graph, otherwise the full minor
/// ideal together with `(x_2, ..., x_n)`.
pub fn predicted_minimal_primes(g: &LabeledGraph) -> Result<Vec<Ideal>> {
    require_connected_closed(g)?;
    let n = g.num_vertices();
    let full = scroll_full_ideal(n)?;
    if g.is_complete() {
        Ok(vec![full])
    } else {
        Ok(vec![full, middle_variable_ideal(n)])
    }
}

/// The combinatorial radicality predicate: complete, or clique complex
/// generated by the two intervals `[1, n-1]` and `[2, n]`.
pub fn predicted_radical(g: &LabeledGraph) -> Result<bool> {
    require_connected_closed(g)?;
    if g.is_complete() {
        return Ok(true);
    }
    let n = g.num_vertices();
    let ci = clique_intervals(g)?;
    Ok(ci.intervals() == [(1, n - 1), (2, n)])
}

/// The actual radicality test: complete graphs are radical outright;
/// otherwise compare the edge ideal against the intersection of its
/// predicted minimal primes.
pub fn radical_check(g: &LabeledGraph) -> Result<bool> {
    require_connected_closed(g)?;
    if g.is_complete() {
        return Ok(true);
    }
    let n = g.num_vertices();
    let ideal = scroll_edge_ideal(g);
    let meet = intersect(&scroll_full_ideal(n)?, &middle_variable_ideal(n))?;
    ideal_equal(&ideal, &meet, MonomialOrder::GradedRevLex)
}

/// Report for the set-theoretic complete intersection verification.
#[derive(Debug, Clone)]
pub struct StciReport {
    /// minors of the graph that fail radical membership in the path ideal
    pub failing_forward: Vec<(usize, usize)>,
    /// path generators failing radical membership in the graph ideal
    pub failing_backward: Vec<(usize, usize)>,
    pub height: usize,
    pub expected_height: usize,
}

impl StciReport {
    pub fn ok(&self) -> bool {
        self.failing_forward.is_empty()
            && self.failing_backward.is_empty()
            && self.height == self.expected_height
    }
}

/// Check that the graph ideal and the path ideal have the same radical
/// (mutual radical membership of generators) and report the height
/// `n - 1`, computed from the initial ideal rather than assumed.
pub fn stci_witness(g: &LabeledGraph) -> Result<StciReport> {
    require_connected_closed(g)?;
    let n = g.num_vertices();
    let ring = PolyRing::for_vertices(n);
    let path = LabeledGraph::path(n);
    let path_ideal = scroll_edge_ideal(&path);
    let graph_ideal = scroll_edge_ideal(g);

    let mut failing_forward = Vec::new();
    for &(i, j) in g.edges() {
        let minor = edge_minor(&ring, i, j);
        if !radical_membership(&minor, &path_ideal)? {
            failing_forward.push((i, j));
        }
    }
    let mut failing_backward = Vec::new();
    for &(i, j) in path.edges() {
        let minor = edge_minor(&ring, i, j);
        if !radical_membership(&minor, &graph_ideal)? {
            failing_backward.push((i, j));
        }
    }
    let init = crate::groebner::initial_ideal(&buchberger(
        &graph_ideal,
        MonomialOrder::GradedRevLex,
    ));
    let dim = crate::hilbert::krull_dim_monomial(&init)?;
    let height = (n + 1) - dim;
    Ok(StciReport {
        failing_forward,
        failing_backward,
        height,
        expected_height: n - 1,
    })
}

/// Degree-2 linear resolution test: with `g = n - c`, the degree-2 piece
/// of the edge ideal must have dimension `binomial(g + 1, 2)` (there is
/// nothing in degree one by construction).
pub fn linear_resolution_test(g: &LabeledGraph) -> Result<bool> {
    if !g.is_closed_labeling() {
        return Err(Error::NotClosed);
    }
    let n = g.num_vertices();
    let c = g.connected_components().len();
    let ideal = scroll_edge_ideal(g);
    let dim2 = graded_dim_ideal(&ideal, 2, MonomialOrder::GradedRevLex);
    Ok(dim2 == binomial((n - c + 1) as u64, 2))
}

fn require_connected_closed(g: &LabeledGraph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_closed_labeling() {
        return Err(Error::NotClosed);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, GraphFilter};
    use crate::groebner::{ideal_member, initial_ideal};
    use crate::ring::render;

    const REV: MonomialOrder = MonomialOrder::GradedRevLex;

    #[test]
    fn edge_ideal_of_path() {
        let ideal = scroll_edge_ideal(&LabeledGraph::path(3));
        let ring = PolyRing::for_vertices(3);
        let rendered: Vec<String> = ideal
            .generators()
            .iter()
            .map(|g| render(g, &ring, REV))
            .collect();
        assert_eq!(rendered, vec!["x2^2 - x1*x3", "x3^2 - x2*x4"]);
        assert!(scroll_edge_ideal(&LabeledGraph::from_edges(4, &[]).unwrap()).is_zero_ideal());
        assert_eq!(scroll_edge_ideal(&LabeledGraph::complete(3)).generators().len(), 3);
    }

    #[test]
    fn full_ideal_equals_complete_graph_ideal() {
        assert!(scroll_full_ideal(1).is_err());
        let full = scroll_full_ideal(2).unwrap();
        assert_eq!(full.generators().len(), 1);
        for n in 2..=5 {
            let full = scroll_full_ideal(n).unwrap();
            let complete = scroll_edge_ideal(&LabeledGraph::complete(n));
            assert!(ideal_equal(&full, &complete, REV).unwrap());
        }
    }

    #[test]
    fn predicted_initial_examples() {
        // complete graph: (x2, ..., xn)^2
        let kn = LabeledGraph::complete(4);
        let ci = clique_intervals(&kn).unwrap();
        let predicted = predicted_initial_ideal(&ci, 4);
        assert_eq!(predicted, MonomialIdeal::interval_square(5, 1, 3));
        // line graph: pure squares
        let line = LabeledGraph::path(5);
        let ci = clique_intervals(&line).unwrap();
        let predicted = predicted_initial_ideal(&ci, 5);
        assert_eq!(predicted.min_gens().len(), 4);
        assert!(predicted.min_gens().iter().all(|m| m.degree() == 2));
        // matches the actual initial ideal
        let actual = initial_ideal(&buchberger(&scroll_edge_ideal(&line), REV));
        assert_eq!(predicted, actual);
        // cliques [1,2],[2,4] on n = 4: (x2^2) + (x3, x4)^2
        let g = LabeledGraph::from_cliques(4, &[(1, 2), (2, 4)]).unwrap();
        let predicted = predicted_initial_ideal(&clique_intervals(&g).unwrap(), 4);
        let actual = initial_ideal(&buchberger(&scroll_edge_ideal(&g), REV));
        assert_eq!(predicted, actual);
        assert_eq!(predicted.min_gens().len(), 4); // x2^2, x3^2, x3*x4, x4^2
    }

    #[test]
    fn certificates_expand_exactly() {
        let ring = PolyRing::for_vertices(3);
        let p3 = LabeledGraph::path(3);
        // edge pair: multiplier 1
        let cert = saturation_certificate(&p3, 1, 2).unwrap();
        assert!(cert.multiplier.is_one());
        assert!(cert.verify(&ring).unwrap());
        // distance two: multiplier x3, combination x4*d12 + x2*d23
        let cert = saturation_certificate(&p3, 1, 3).unwrap();
        assert_eq!(cert.multiplier, Monomial::var(4, 2));
        assert_eq!(cert.path, vec![1, 2, 3]);
        assert!(cert.verify(&ring).unwrap());
        // distance three on the path on [4]
        let p4 = LabeledGraph::path(4);
        let ring4 = PolyRing::for_vertices(4);
        let cert = saturation_certificate(&p4, 1, 4).unwrap();
        assert_eq!(cert.multiplier.degree(), 2);
        assert!(cert.verify(&ring4).unwrap());
        // disconnected input is refused
        let disc = LabeledGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            saturation_certificate(&disc, 1, 3),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn certificates_verify_on_all_connected_graphs_on_five() {
        let ring = PolyRing::for_vertices(5);
        for g in enumerate_graphs(5, GraphFilter::Connected).unwrap() {
            for i in 1..=5 {
                for j in (i + 1)..=5 {
                    let cert = saturation_certificate(&g, i, j).unwrap();
                    assert!(cert.verify(&ring).unwrap(), "graph {:?} pair ({i},{j})", g.edges());
                }
            }
        }
    }

    #[test]
    fn minimal_prime_predictions() {
        let k4 = LabeledGraph::complete(4);
        assert_eq!(predicted_minimal_primes(&k4).unwrap().len(), 1);
        let p4 = LabeledGraph::path(4);
        let primes = predicted_minimal_primes(&p4).unwrap();
        assert_eq!(primes.len(), 2);
        // every generator of the edge ideal lies in each predicted prime
        let ideal = scroll_edge_ideal(&p4);
        for prime in &primes {
            let gb = buchberger(prime, REV);
            for gen in ideal.generators() {
                assert!(ideal_member(gen, &gb).unwrap());
            }
        }
    }

    #[test]
    fn radical_predictions_and_checks() {
        assert!(predicted_radical(&LabeledGraph::complete(5)).unwrap());
        // the two-interval complex [1, n-1], [2, n]
        let g = LabeledGraph::from_cliques(4, &[(1, 3), (2, 4)]).unwrap();
        assert!(predicted_radical(&g).unwrap());
        assert!(radical_check(&g).unwrap());
        // the path on [3] is exactly the two-interval case
        assert!(predicted_radical(&LabeledGraph::path(3)).unwrap());
        assert!(radical_check(&LabeledGraph::path(3)).unwrap());
        // the path on [4] is not radical
        assert!(!predicted_radical(&LabeledGraph::path(4)).unwrap());
        assert!(!radical_check(&LabeledGraph::path(4)).unwrap());
        assert!(predicted_radical(&LabeledGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap()).is_err());
    }

    #[test]
    fn stci_reports() {
        // the path itself trivially agrees with itself
        let report = stci_witness(&LabeledGraph::path(5)).unwrap();
        assert!(report.ok());
        assert_eq!(report.height, 4);
        // a two-clique closed graph shares the path's radical
        let g = LabeledGraph::from_cliques(5, &[(1, 3), (3, 5)]).unwrap();
        let report = stci_witness(&g).unwrap();
        assert!(report.ok());
        // the complete graph does NOT: the long minor x1*x{n+1} - x2*xn
        // survives at points with all middle coordinates zero
        let report = stci_witness(&LabeledGraph::complete(4)).unwrap();
        assert_eq!(report.failing_forward, vec![(1, 4)]);
        assert!(report.failing_backward.is_empty());
        assert_eq!(report.height, 3);
    }

    #[test]
    fn linear_resolution_counts() {
        assert!(linear_resolution_test(&LabeledGraph::complete(4)).unwrap());
        assert!(!linear_resolution_test(&LabeledGraph::path(3)).unwrap());
        // generic disconnected closed graph: strict inequality
        let disc = LabeledGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(!linear_resolution_test(&disc).unwrap());
        assert!(linear_resolution_test(&two_star()).is_err());
    }

    fn two_star() -> LabeledGraph {
        LabeledGraph::from_edges(6, &[(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]).unwrap()
    }
}
