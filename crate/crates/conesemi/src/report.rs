//! Text and JSON reports.

use std::fmt::Write;

use conesemi_core::{CSemigroup, Error, Forest, PositionedContext, TermOrder, Vector};
use serde::Serialize;

use crate::document::{coords, Coords, SemigroupDoc};
use crate::CliError;

pub fn list(xs: &[Vector]) -> String {
    if xs.is_empty() {
        return "{}".into();
    }
    let parts: Vec<String> = xs.iter().map(Vector::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn coord_list(xs: &[Vector]) -> Vec<Coords> {
    xs.iter().map(coords).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusEntry {
    pub order: String,
    /// Signed so the `(-1,...,-1)` convention can be shown.
    pub frobenius: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositionReport {
    pub k: Coords,
    pub in_cone: bool,
    pub in_semigroup: bool,
    pub positioned: bool,
    pub primary: bool,
    pub class: Option<String>,
    pub b_set: Option<Vec<Coords>>,
    pub beta: Option<Coords>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub generators: Vec<Coords>,
    pub whole_cone: bool,
    pub genus: usize,
    pub gaps: Vec<Coords>,
    pub frobenius: Vec<FrobeniusEntry>,
    pub minimal_generators: Vec<Coords>,
    pub pseudo_frobenius: Vec<Coords>,
    pub special_gaps: Vec<Coords>,
    pub maximal_gaps: Vec<Coords>,
    pub m_set: Vec<Coords>,
    pub c_set: Vec<Coords>,
    /// Absent for `S = C`, or when the search bound could not be certified.
    pub x_minimals: Option<Vec<Coords>>,
    pub symmetric: bool,
    pub pseudo_symmetric: bool,
    pub positions: Vec<PositionReport>,
}

/// Frobenius elements are reported for lex, grlex, grevlex and, if it is
/// none of these, `order`.
pub fn analyze(s: &CSemigroup, ks: &[Vector], order: &TermOrder, gns: bool) -> Result<Analysis, CliError> {
    let mut orders = vec![TermOrder::lex(), TermOrder::grlex(), TermOrder::grevlex()];
    if !orders.contains(order) {
        orders.push(*order);
    }
    let frobenius = orders
        .iter()
        .map(|o| {
            let f = match s.frobenius(o) {
                Some(f) => Some(f.coords().iter().map(|&c| i64::from(c)).collect()),
                None if gns && s.cone().is_orthant() => Some(vec![-1; s.dim()]),
                None => None,
            };
            FrobeniusEntry { order: o.to_string(), frobenius: f }
        })
        .collect();
    let x_minimals = match s.x_minimals() {
        Ok(xs) => Some(coord_list(&xs)),
        Err(Error::NoGaps | Error::BoundUncertain) => None,
        Err(e) => return Err(e.into()),
    };
    let positions = ks.iter().map(|k| position(s, k, order)).collect::<Result<_, _>>()?;
    Ok(Analysis {
        generators: coord_list(s.cone().generators()),
        whole_cone: s.is_whole_cone(),
        genus: s.genus(),
        gaps: coord_list(s.gaps()),
        frobenius,
        minimal_generators: coord_list(s.minimal_generators()),
        pseudo_frobenius: coord_list(s.pseudo_frobenius()),
        special_gaps: coord_list(s.special_gaps()),
        maximal_gaps: coord_list(s.maximal_gaps()),
        m_set: coord_list(s.m_set()),
        c_set: coord_list(s.c_set()),
        x_minimals,
        symmetric: s.is_symmetric(order),
        pseudo_symmetric: s.is_pseudo_symmetric(order),
        positions,
    })
}

fn position(s: &CSemigroup, k: &Vector, order: &TermOrder) -> Result<PositionReport, CliError> {
    let mut r = PositionReport {
        k: coords(k),
        in_cone: s.cone().contains(k)?,
        in_semigroup: false,
        positioned: false,
        primary: false,
        class: None,
        b_set: None,
        beta: None,
    };
    if !r.in_cone {
        return Ok(r);
    }
    r.in_semigroup = s.has(k);
    r.positioned = s.is_k_positioned(k)?;
    r.primary = s.is_primary_positioned(k)?;
    if r.in_semigroup && r.primary {
        r.class = Some(s.classify(k)?.as_str().to_owned());
        let ctx = PositionedContext::new(s, *k, *order)?;
        r.b_set = Some(coord_list(ctx.b_set()));
        if !ctx.b_set().is_empty() {
            r.beta = Some(coords(&ctx.beta()?));
        }
    }
    Ok(r)
}

fn fmt_coords(c: &[u32]) -> String {
    let parts: Vec<String> = c.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn fmt_set(xs: &[Coords]) -> String {
    if xs.is_empty() {
        return "{}".into();
    }
    let parts: Vec<String> = xs.iter().map(|c| fmt_coords(c)).collect();
    format!("{{{}}}", parts.join(", "))
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut o = String::new();
        writeln!(o, "cone generators: {}", fmt_set(&self.generators)).unwrap();
        if self.whole_cone {
            writeln!(o, "S = C").unwrap();
        }
        writeln!(o, "genus: {}", self.genus).unwrap();
        writeln!(o, "gaps: {}", fmt_set(&self.gaps)).unwrap();
        for f in &self.frobenius {
            let v = match &f.frobenius {
                Some(c) => {
                    let parts: Vec<String> = c.iter().map(i64::to_string).collect();
                    format!("({})", parts.join(","))
                }
                None => "none".into(),
            };
            writeln!(o, "frobenius [{}]: {v}", f.order).unwrap();
        }
        writeln!(o, "minimal generators ({}): {}", self.minimal_generators.len(), fmt_set(&self.minimal_generators))
            .unwrap();
        writeln!(o, "pseudo-frobenius: {}", fmt_set(&self.pseudo_frobenius)).unwrap();
        writeln!(o, "special gaps: {}", fmt_set(&self.special_gaps)).unwrap();
        writeln!(o, "maximal gaps: {}", fmt_set(&self.maximal_gaps)).unwrap();
        writeln!(o, "M(S) ({}): {}", self.m_set.len(), fmt_set(&self.m_set)).unwrap();
        writeln!(o, "C(S) ({}): {}", self.c_set.len(), fmt_set(&self.c_set)).unwrap();
        match &self.x_minimals {
            Some(xs) => writeln!(o, "minimals of X_S: {}", fmt_set(xs)).unwrap(),
            None if self.whole_cone => writeln!(o, "minimals of X_S: {{0}}").unwrap(),
            None => writeln!(o, "minimals of X_S: undetermined").unwrap(),
        }
        writeln!(o, "symmetric: {}", yes(self.symmetric)).unwrap();
        writeln!(o, "pseudo-symmetric: {}", yes(self.pseudo_symmetric)).unwrap();
        for p in &self.positions {
            write!(o, "k = {}:", fmt_coords(&p.k)).unwrap();
            if !p.in_cone {
                writeln!(o, " not in the cone").unwrap();
                continue;
            }
            write!(o, " in S {}, positioned {}, primary {}", yes(p.in_semigroup), yes(p.positioned), yes(p.primary))
                .unwrap();
            if let Some(c) = &p.class {
                write!(o, ", class {c}").unwrap();
            }
            if let Some(b) = &p.b_set {
                write!(o, ", B {}", fmt_set(b)).unwrap();
            }
            if let Some(b) = &p.beta {
                write!(o, ", beta {}", fmt_coords(b)).unwrap();
            }
            o.push('\n');
        }
        o
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Header line plus one indented line per node, each tree depth-first.
pub fn forest_text(f: &Forest) -> Result<String, CliError> {
    let mut o = String::new();
    writeln!(o, "P({}) under {}: {} semigroups in {} trees", f.k(), f.order(), f.node_count(), f.trees().len())
        .unwrap();
    let mut offset = 0;
    for t in f.trees() {
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            let n = &t.nodes()[i];
            let indent = "  ".repeat(n.depth + 1);
            let class = f.class_of(&n.semigroup)?;
            match n.beta {
                None => write!(o, "{indent}#{} root g={} {class}", offset + i, n.semigroup.genus()).unwrap(),
                Some(b) => write!(o, "{indent}#{} +{b} g={} {class}", offset + i, n.semigroup.genus()).unwrap(),
            }
            writeln!(o, " gaps {}", list(n.semigroup.gaps())).unwrap();
            stack.extend(n.children.iter().rev());
        }
        offset += t.len();
    }
    Ok(o)
}

pub fn semigroups_text(title: &str, xs: &[(CSemigroup, Option<Vector>)]) -> String {
    let mut o = String::new();
    writeln!(o, "{title}: {}", xs.len()).unwrap();
    for (i, (s, b)) in xs.iter().enumerate() {
        write!(o, "  #{i} g={}", s.genus()).unwrap();
        if let Some(b) = b {
            write!(o, " beta={b}").unwrap();
        }
        writeln!(o, " gaps {}", list(s.gaps())).unwrap();
    }
    o
}

pub fn semigroups_docs(xs: &[(CSemigroup, Option<Vector>)]) -> Vec<SemigroupDoc> {
    xs.iter().map(|(s, b)| SemigroupDoc::new(s, b.as_ref())).collect()
}
