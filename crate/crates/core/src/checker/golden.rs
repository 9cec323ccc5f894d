//! The ten coproducts of the triangle `a -> b, b -> c, a -> c`, recomputed and
//! compared with hand-built expectations.

use super::{CheckReport, Witness};
use crate::algebra::{rational, Mode, Monomial, Tensor};
use crate::coproduct::{coproduct, cut_coproduct, CoalgebraConfig};
use crate::error::Result;
use crate::graph::{GraphBuilder, OrientedGraph};
use crate::io::emit::{emit_tensor, Format};
use crate::partition::{CoverVariant, ExternalPolicy};

#[derive(Clone, Debug)]
pub struct GoldenCase {
    pub name: &'static str,
    pub description: &'static str,
    pub expected: Tensor,
    pub computed: Tensor,
}

impl GoldenCase {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

pub fn triangle() -> OrientedGraph {
    GraphBuilder::with_vertices(3).edge(0, 1).edge(1, 2).edge(0, 2).build()
}

fn m(g: OrientedGraph) -> Monomial {
    Monomial::from_graph(&g, Mode::Bialgebra)
}

struct Pieces {
    triangle: Monomial,
    point: Monomial,
    /// one vertex with two outgoing legs
    source: Monomial,
    /// one vertex with an incoming and an outgoing leg
    flow: Monomial,
    /// one vertex with two incoming legs
    sink: Monomial,
    /// an arrow whose two ends both carry an incoming leg, and so on
    edge_in_in: Monomial,
    edge_out_in: Monomial,
    edge_out_out: Monomial,
    edge: Monomial,
    double: Monomial,
    two_cycle: Monomial,
}

fn pieces() -> Pieces {
    Pieces {
        triangle: m(triangle()),
        point: m(GraphBuilder::with_vertices(1).build()),
        source: m(GraphBuilder::with_vertices(1).leg_out(0).leg_out(0).build()),
        flow: m(GraphBuilder::with_vertices(1).leg_in(0).leg_out(0).build()),
        sink: m(GraphBuilder::with_vertices(1).leg_in(0).leg_in(0).build()),
        edge_in_in: m(GraphBuilder::with_vertices(2).edge(0, 1).leg_in(0).leg_in(1).build()),
        edge_out_in: m(GraphBuilder::with_vertices(2).edge(0, 1).leg_out(0).leg_in(1).build()),
        edge_out_out: m(GraphBuilder::with_vertices(2).edge(0, 1).leg_out(0).leg_out(1).build()),
        edge: m(GraphBuilder::with_vertices(2).edge(0, 1).build()),
        double: m(GraphBuilder::with_vertices(2).edge(0, 1).edge(0, 1).build()),
        two_cycle: m(GraphBuilder::with_vertices(2).edge(0, 1).edge(1, 0).build()),
    }
}

fn tensor(terms: &[(i64, Monomial, Monomial)]) -> Result<Tensor> {
    let mut t = Tensor::zero(2)?;
    for (c, a, b) in terms {
        t.add_term(vec![a.clone(), b.clone()], rational(*c));
    }
    Ok(t)
}

/// All ten cases, in display order.
pub fn golden_cases() -> Result<Vec<GoldenCase>> {
    use CoverVariant::*;
    use ExternalPolicy::*;
    use Mode::*;
    let p = pieces();
    let t = triangle();
    let one = Monomial::unit();
    let cfg = CoalgebraConfig::new;
    let sfs = p.source.mul(&p.flow).mul(&p.sink);
    let full_bi = vec![
        (1, sfs.clone(), p.triangle.clone()),
        (1, p.triangle.clone(), p.point.clone()),
        (1, p.source.mul(&p.edge_in_in), p.double.clone()),
        (1, p.flow.mul(&p.edge_out_in), p.two_cycle.clone()),
        (1, p.sink.mul(&p.edge_out_out), p.double.clone()),
    ];
    let full_hopf = vec![
        (1, one.clone(), p.triangle.clone()),
        (1, p.triangle.clone(), one.clone()),
        (1, p.edge_in_in.clone(), p.double.clone()),
        (1, p.edge_out_in.clone(), p.two_cycle.clone()),
        (1, p.edge_out_out.clone(), p.double.clone()),
    ];
    let without_cycle = |v: &[(i64, Monomial, Monomial)]| -> Vec<(i64, Monomial, Monomial)> {
        v.iter().filter(|(_, _, b)| *b != p.two_cycle).cloned().collect()
    };
    let pt_edge = p.point.mul(&p.edge);
    let cases = vec![
        (
            "coproduct-full-bialgebra",
            "all covering subgraphs, residues kept",
            tensor(&full_bi)?,
            coproduct(&t, cfg(Full, Bialgebra, Keep))?,
        ),
        (
            "coproduct-full-hopf",
            "all covering subgraphs, residues identified with 1",
            tensor(&full_hopf)?,
            coproduct(&t, cfg(Full, Hopf, Keep))?,
        ),
        (
            "coproduct-1pi-bialgebra",
            "locally 1PI covering subgraphs, residues kept",
            tensor(&full_bi[..2])?,
            coproduct(&t, cfg(Locally1PI, Bialgebra, Keep))?,
        ),
        (
            "coproduct-1pi-hopf",
            "locally 1PI covering subgraphs, residues identified with 1",
            tensor(&full_hopf[..2])?,
            coproduct(&t, cfg(Locally1PI, Hopf, Keep))?,
        ),
        (
            "coproduct-cf-bialgebra",
            "poset-compatible covering subgraphs, residues kept",
            tensor(&without_cycle(&full_bi))?,
            coproduct(&t, cfg(PosetCompatible, Bialgebra, Keep))?,
        ),
        (
            "coproduct-cf-hopf",
            "poset-compatible covering subgraphs, residues identified with 1",
            tensor(&without_cycle(&full_hopf))?,
            coproduct(&t, cfg(PosetCompatible, Hopf, Keep))?,
        ),
        (
            "cut-coproduct",
            "admissible cuts, external legs kept",
            tensor(&[
                (1, p.triangle.clone(), one.clone()),
                (1, one.clone(), p.triangle.clone()),
                (1, p.edge_in_in.clone(), p.source.clone()),
                (1, p.sink.clone(), p.edge_out_out.clone()),
            ])?,
            cut_coproduct(&t, Keep)?,
        ),
        (
            "coproduct-full-bialgebra-discard",
            "all covering subgraphs without external legs, residues kept",
            tensor(&[
                (1, p.point.mul(&p.point).mul(&p.point), p.triangle.clone()),
                (1, p.triangle.clone(), p.point.clone()),
                (2, pt_edge.clone(), p.double.clone()),
                (1, pt_edge, p.two_cycle.clone()),
            ])?,
            coproduct(&t, cfg(Full, Bialgebra, Discard))?,
        ),
        (
            "coproduct-full-hopf-discard",
            "all covering subgraphs without external legs, residues identified with 1",
            tensor(&[
                (1, one.clone(), p.triangle.clone()),
                (1, p.triangle.clone(), one.clone()),
                (2, p.edge.clone(), p.double.clone()),
                (1, p.edge.clone(), p.two_cycle.clone()),
            ])?,
            coproduct(&t, cfg(Full, Hopf, Discard))?,
        ),
        (
            "cut-coproduct-discard",
            "admissible cuts without external legs",
            tensor(&[
                (1, p.triangle.clone(), one.clone()),
                (1, one.clone(), p.triangle.clone()),
                (1, p.point.clone(), p.edge.clone()),
                (1, p.edge.clone(), p.point.clone()),
            ])?,
            cut_coproduct(&t, Discard)?,
        ),
    ];
    Ok(cases
        .into_iter()
        .map(|(name, description, expected, computed)| GoldenCase {
            name,
            description,
            expected,
            computed,
        })
        .collect())
}

/// Runs [`golden_cases`] as a single report with one instance per case.
pub fn golden_suite() -> CheckReport {
    let mut report = CheckReport::new("golden");
    let t = triangle();
    match golden_cases() {
        Ok(cases) => {
            for case in cases {
                report.instances_run += 1;
                if !case.passed() {
                    report.failures.push(Witness::new(
                        &[&t],
                        format!("{}:\n{}", case.name, emit_tensor(&case.expected, Format::Text)),
                        emit_tensor(&case.computed, Format::Text),
                    ));
                }
            }
        }
        Err(e) => report.failures.push(Witness::new(&[&t], "ten golden coproducts", format!("error: {e}"))),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_pass() {
        for case in golden_cases().unwrap() {
            assert!(
                case.passed(),
                "{}\nexpected\n{}computed\n{}",
                case.name,
                emit_tensor(&case.expected, Format::Text),
                emit_tensor(&case.computed, Format::Text)
            );
        }
        let r = golden_suite();
        assert!(r.passed());
        assert_eq!(r.instances_run, 10);
    }
}
