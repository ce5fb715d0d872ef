//! Decomposition families, minimal subfamilies, chromatic excess and
//! edge-criticality.
//!
//! The decomposition family of an `r`-chromatic `H` collects, for every
//! proper `r`-colouring and every pair of colour classes, the subgraph of
//! `H` induced on those two classes. Isolated vertices are kept: `K_2 + K_1`
//! is a strictly weaker pattern than `K_2`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::canon;
use crate::color::{chromatic_uncapped, colorings_uncapped};
use crate::embed::contains;
use crate::{check_cap, graph6, Caps, Error, Graph, Result};

/// Where a decomposition-family member sits inside `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberOrigin {
    /// The proper `chi(H)`-colouring the member was cut from.
    pub colors: Vec<usize>,
    /// The two colour classes that were kept.
    pub kept: (usize, usize),
    /// `vertices[i]` is the vertex of `H` playing member vertex `i`.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub graph: Graph,
    /// Canonical code, used for deduplication and ordering.
    pub code: String,
    pub origin: Option<MemberOrigin>,
}

/// A set of pairwise non-isomorphic graphs, ordered by canonical code.
#[derive(Clone, Debug)]
pub struct GraphFamily {
    members: Vec<FamilyMember>,
    minimal: bool,
    source: String,
}

impl GraphFamily {
    /// Deduplicates `graphs` up to isomorphism.
    pub fn from_graphs(graphs: Vec<Graph>, source: impl Into<String>, caps: &Caps) -> Result<Self> {
        let mut members = Vec::with_capacity(graphs.len());
        for g in graphs {
            check_cap("family member order", g.order(), caps.embedding)?;
            let code = canon::code(&g);
            members.push(FamilyMember { graph: g, code, origin: None });
        }
        Ok(Self::from_members(members, false, source.into()))
    }

    fn from_members(mut members: Vec<FamilyMember>, minimal: bool, source: String) -> Self {
        // Stable sort keeps the first occurrence of each class in front.
        members.sort_by(|a, b| a.code.cmp(&b.code));
        members.dedup_by(|b, a| a.code == b.code);
        GraphFamily { members, minimal, source }
    }

    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|m| &m.graph)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Isomorphism-invariant key: member canonical codes joined by `,`.
    pub fn key(&self) -> String {
        let codes: Vec<&str> = self.members.iter().map(|m| m.code.as_str()).collect();
        codes.join(",")
    }

    /// Whether `g` contains some member as a subgraph.
    pub fn hits(&self, g: &Graph) -> bool {
        self.members.iter().any(|m| contains(g, &m.graph))
    }
}

fn describe(h: &Graph) -> String {
    match h.label() {
        Some(l) => String::from(l),
        None => graph6::emit_graph6(h),
    }
}

/// The decomposition family `F_H` of a graph with `chi(H) >= 3`.
pub fn decomposition_family(h: &Graph, caps: &Caps) -> Result<GraphFamily> {
    check_cap("pattern order", h.order(), caps.embedding)?;
    let r = chromatic_uncapped(h);
    if r < 3 {
        return Err(Error::Domain(format!(
            "decomposition family needs chromatic number at least 3, got {r}"
        )));
    }
    let mut members = Vec::new();
    let mut seen = alloc::collections::BTreeSet::new();
    for coloring in colorings_uncapped(h, r) {
        let classes = coloring.class_sets();
        for a in 0..r {
            for b in a + 1..r {
                let mut vertices: Vec<usize> = classes[a].iter().chain(&classes[b]).copied().collect();
                vertices.sort_unstable();
                let graph = h.induced(&vertices);
                let code = canon::code(&graph);
                if seen.insert(code.clone()) {
                    members.push(FamilyMember {
                        graph,
                        code,
                        origin: Some(MemberOrigin {
                            colors: coloring.colors.clone(),
                            kept: (a, b),
                            vertices,
                        }),
                    });
                }
            }
        }
    }
    Ok(GraphFamily::from_members(members, false, format!("F_H for H={}", describe(h))))
}

/// Drops every member that contains another member, leaving a subfamily
/// in which no member contains another and which still hits every graph
/// the original family hits.
pub fn minimal_subfamily(f: &GraphFamily) -> Result<GraphFamily> {
    if f.is_empty() {
        return Err(Error::Domain("minimal subfamily of an empty family".into()));
    }
    let kept: Vec<FamilyMember> = f
        .members
        .iter()
        .enumerate()
        .filter(|(i, m)| {
            !f.members
                .iter()
                .enumerate()
                .any(|(j, other)| j != *i && contains(&m.graph, &other.graph))
        })
        .map(|(_, m)| m.clone())
        .collect();
    let source = match f.source.strip_prefix("F_H") {
        Some(rest) => format!("F*_H{rest}"),
        None => format!("minimal subfamily of {}", f.source),
    };
    let minimal = GraphFamily::from_members(kept, true, source);
    debug_assert!(f.members.iter().all(|m| minimal.hits(&m.graph)));
    Ok(minimal)
}

/// `F*_H` directly from `H`.
pub fn minimal_decomposition_family(h: &Graph, caps: &Caps) -> Result<GraphFamily> {
    minimal_subfamily(&decomposition_family(h, caps)?)
}

/// Smallest colour class over all proper `chi(H)`-colourings.
pub fn chromatic_excess(h: &Graph, caps: &Caps) -> Result<usize> {
    check_cap("pattern order", h.order(), caps.embedding)?;
    let r = chromatic_uncapped(h);
    Ok(colorings_uncapped(h, r)
        .map(|c| c.smallest_class())
        .min()
        .unwrap_or(0))
}

/// True iff deleting some edge lowers the chromatic number.
pub fn is_edge_critical(h: &Graph, caps: &Caps) -> Result<bool> {
    check_cap("pattern order", h.order(), caps.embedding)?;
    let r = chromatic_uncapped(h);
    Ok(h.edges().into_iter().any(|(u, v)| {
        let mut g = h.clone();
        g.remove_edge(u, v);
        chromatic_uncapped(&g) < r
    }))
}
