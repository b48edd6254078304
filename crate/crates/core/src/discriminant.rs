//! Discriminant graphs: the dual graph of a unimodular triangulation of each
//! polygon of sections, glued along the distinguished rays through one
//! positive node per triangle summand, with SVG and JSON export.

use crate::degeneration::{DegenerationData, SlabEdgeKind};
use crate::error::{Error, Result};
use crate::linalg::{det2_int, dot_int, primitive, sub_int, Int, IntVector};
use crate::minkowski::Summand;
use crate::polygon::Polygon;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// A triangulation of a lattice polygon into triangles of normalized area one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularTriangulation {
    pub points: Vec<IntVector>,
    pub triangles: Vec<[usize; 3]>,
}

fn twice_area(a: &[Int], b: &[Int], c: &[Int]) -> Int {
    use num_traits::Signed;
    det2_int(&sub_int(b, a), &sub_int(c, a)).abs()
}

fn refine(tri: [IntVector; 3], out: &mut Vec<[IntVector; 3]>) {
    if twice_area(&tri[0], &tri[1], &tri[2]).is_one() {
        out.push(tri);
        return;
    }
    let hull = Polygon::from_int_points(&tri);
    let q = hull
        .lattice_points()
        .into_iter()
        .find(|p| !tri.contains(p))
        .expect("a lattice triangle of area above one has a further lattice point");
    for i in 0..3 {
        let (u, w) = (&tri[(i + 1) % 3], &tri[(i + 2) % 3]);
        if !twice_area(&q, u, w).is_zero() {
            refine([q.clone(), u.clone(), w.clone()], out);
        }
    }
}

/// Pulling triangulation from the lexicographically least lattice point,
/// refined until every triangle is unimodular. Segments and points give no
/// triangles.
pub fn max_triangulation(polygon: &Polygon) -> Result<UnimodularTriangulation> {
    if !polygon.is_integral() {
        return Err(Error::NotIntegral("polygon of sections".into()));
    }
    let points = polygon.lattice_points();
    let mut tris = Vec::new();
    if polygon.dimension() == 2 {
        let verts = polygon.int_vertices().expect("integral");
        let p0 = points.iter().min().expect("non-empty").clone();
        let k = verts.len();
        for i in 0..k {
            let (a, b) = (&verts[i], &verts[(i + 1) % k]);
            if !twice_area(&p0, a, b).is_zero() {
                refine([p0.clone(), a.clone(), b.clone()], &mut tris);
            }
        }
    }
    let index: BTreeMap<&IntVector, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut triangles: Vec<[usize; 3]> = tris
        .iter()
        .map(|t| {
            let mut ids = [index[&t[0]], index[&t[1]], index[&t[2]]];
            ids.sort();
            ids
        })
        .collect();
    triangles.sort();
    Ok(UnimodularTriangulation { points, triangles })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeKind {
    /// A trivalent vertex inside a slab.
    Negative,
    /// The junction of the three arcs of a triangle summand on its ray.
    Positive,
    /// An end on the boundary of the base.
    Boundary,
    /// An end on a distinguished ray, before gluing.
    Attachment,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Node {
    pub id: usize,
    pub kind: NodeKind,
    /// The two-cone of the slab, absent for positive nodes.
    pub slab: Option<usize>,
    /// Schematic position.
    pub pos: [f64; 2],
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DiscriminantGraph {
    pub nodes: Vec<Node>,
    pub edges: Vec<[usize; 2]>,
}

impl DiscriminantGraph {
    fn add(&mut self, kind: NodeKind, slab: Option<usize>, pos: [f64; 2]) -> usize {
        let id = self.nodes.len();
        self.nodes.push(Node { id, kind, slab, pos });
        id
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|n| n.kind == kind).count()
    }

    /// Number of edges at each node.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for [a, b] in &self.edges {
            deg[*a] += 1;
            deg[*b] += 1;
        }
        deg
    }
}

/// The part of the graph inside one slab.
#[derive(Clone, Debug, PartialEq)]
pub struct SlabPiece {
    pub slab: usize,
    pub triangulation: UnimodularTriangulation,
    pub graph: DiscriminantGraph,
    /// Attachment ends grouped by slab edge, in order along the face.
    pub attachments: BTreeMap<usize, Vec<usize>>,
}

fn to_f64(x: &Int) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

fn midpoint(a: &[Int], b: &[Int]) -> [f64; 2] {
    [(to_f64(&a[0]) + to_f64(&b[0])) / 2.0, (to_f64(&a[1]) + to_f64(&b[1])) / 2.0]
}

/// The dual graph of a maximal triangulation of `P_D` for slab `s`, with one
/// end per lattice segment of `∂P_D`: boundary ends on faces dual to edges
/// on `∂P°` and attachment ends on faces dual to ray or line edges.
pub fn dual_graph(data: &DegenerationData, s: usize) -> Result<SlabPiece> {
    let slab = &data.slabs[s];
    let tri = max_triangulation(&slab.sections)?;
    let mut graph = DiscriminantGraph::default();
    let pts = &tri.points;
    let mut by_edge: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for t in &tri.triangles {
        let c = [
            (to_f64(&pts[t[0]][0]) + to_f64(&pts[t[1]][0]) + to_f64(&pts[t[2]][0])) / 3.0,
            (to_f64(&pts[t[0]][1]) + to_f64(&pts[t[1]][1]) + to_f64(&pts[t[2]][1])) / 3.0,
        ];
        let id = graph.add(NodeKind::Negative, Some(slab.cone), c);
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            by_edge.entry([t[i], t[j]]).or_default().push(id);
        }
    }
    // unit segments of ∂P_D with the node they hang from, if any
    let mut unit_segments: Vec<([usize; 2], Option<usize>)> = Vec::new();
    for (seg, owners) in &by_edge {
        match owners.as_slice() {
            [a, b] => graph.edges.push([*a, *b]),
            [a] => unit_segments.push((*seg, Some(*a))),
            _ => unreachable!("an edge of a triangulation bounds at most two triangles"),
        }
    }
    if slab.sections.dimension() == 1 {
        let mut ordered = pts.clone();
        ordered.sort();
        let index: BTreeMap<&IntVector, usize> = pts.iter().enumerate().map(|(i, p)| (p, i)).collect();
        for w in ordered.windows(2) {
            unit_segments.push(([index[&w[0]], index[&w[1]]], None));
        }
    }
    let mut attachments: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut arcs: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for (ei, edge) in slab.edges.iter().enumerate() {
        let level = -edge.coefficient.clone();
        let on_face = |p: &IntVector| dot_int(&edge.normal, p) == level;
        let mut ends = Vec::new();
        for (seg, owner) in &unit_segments {
            if !(on_face(&pts[seg[0]]) && on_face(&pts[seg[1]])) {
                continue;
            }
            let kind = match edge.kind {
                SlabEdgeKind::Boundary { .. } => NodeKind::Boundary,
                _ => NodeKind::Attachment,
            };
            let id = graph.add(kind, Some(slab.cone), midpoint(&pts[seg[0]], &pts[seg[1]]));
            match owner {
                Some(o) => graph.edges.push([*o, id]),
                None => arcs.entry(*seg).or_default().push(id),
            }
            ends.push((pts[seg[0]].clone().min(pts[seg[1]].clone()), id));
        }
        if Int::from(ends.len()) != edge.section_length {
            return Err(Error::Compatibility(format!(
                "slab {}: {} ends on an edge with section length {}",
                slab.cone,
                ends.len(),
                edge.section_length
            )));
        }
        if !matches!(edge.kind, SlabEdgeKind::Boundary { .. }) {
            ends.sort();
            attachments.insert(ei, ends.into_iter().map(|(_, id)| id).collect());
        }
    }
    for (_, ends) in arcs {
        if let [a, b] = ends[..] {
            graph.edges.push([a, b]);
        } else {
            return Err(Error::Compatibility(format!(
                "slab {}: a segment of a degenerate P_D crosses {} faces",
                slab.cone,
                ends.len()
            )));
        }
    }
    Ok(SlabPiece {
        slab: s,
        triangulation: tri,
        graph,
        attachments,
    })
}

/// The node census of an assembled graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphCensus {
    pub p: usize,
    pub n: usize,
    pub boundary: usize,
}

/// The glued graph of all slabs, with the census read off the graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalDiscriminant {
    pub graph: DiscriminantGraph,
    pub pieces: Vec<SlabPiece>,
    pub census: GraphCensus,
}

const PANEL: f64 = 12.0;

/// Builds every slab piece and glues the attachment ends: a triangle summand
/// joins its three ends at a new positive node, a segment summand joins its
/// two ends directly.
pub fn assemble_global(data: &DegenerationData) -> Result<GlobalDiscriminant> {
    let pieces = (0..data.slabs.len())
        .into_par_iter()
        .map(|s| dual_graph(data, s))
        .collect::<Result<Vec<_>>>()?;
    let cols = (data.slabs.len() as f64).sqrt().ceil().max(1.0) as usize;
    let mut graph = DiscriminantGraph::default();
    let mut offsets = Vec::new();
    let mut slab_attachments: Vec<BTreeMap<usize, Vec<usize>>> = Vec::new();
    for (i, piece) in pieces.iter().enumerate() {
        let base = graph.nodes.len();
        let shift = [(i % cols) as f64 * PANEL, (i / cols) as f64 * PANEL];
        for node in &piece.graph.nodes {
            graph.nodes.push(Node {
                id: base + node.id,
                kind: node.kind,
                slab: node.slab,
                pos: [node.pos[0] + shift[0], node.pos[1] + shift[1]],
            });
        }
        for [a, b] in &piece.graph.edges {
            graph.edges.push([base + a, base + b]);
        }
        offsets.push(base);
        slab_attachments.push(
            piece
                .attachments
                .iter()
                .map(|(e, ids)| (*e, ids.iter().map(|id| base + id).collect()))
                .collect(),
        );
    }
    // ends of each summand, keyed by (ray, summand index)
    let mut ends: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (s, slab) in data.slabs.iter().enumerate() {
        for (ei, edge) in slab.edges.iter().enumerate() {
            let rays: Vec<usize> = match edge.kind {
                SlabEdgeKind::Ray { ray } => vec![ray],
                SlabEdgeKind::Line => (0..data.fan.rays().len()).collect(),
                SlabEdgeKind::Boundary { .. } => continue,
            };
            let mut available = slab_attachments[s].get(&ei).cloned().unwrap_or_default().into_iter();
            for k in rays {
                let entry = &data.ray_data.entries[k];
                let g = primitive(&entry.project(&data.fan.quotient_generator(slab.cone, k)));
                for (j, summand) in entry.summands.iter().enumerate() {
                    let len = summand.face_length(&g).to_integer();
                    let mut c = Int::zero();
                    while c < len {
                        let id = available.next().ok_or_else(|| {
                            Error::Compatibility(format!("slab {}: too few ends for the summands", slab.cone))
                        })?;
                        ends.entry((k, j)).or_default().push(id);
                        c += 1;
                    }
                }
            }
            if available.next().is_some() {
                return Err(Error::Compatibility(format!(
                    "slab {}: ends left over after matching summands",
                    slab.cone
                )));
            }
        }
    }
    for (k, entry) in data.ray_data.entries.iter().enumerate() {
        for (j, summand) in entry.summands.iter().enumerate() {
            let got = ends.remove(&(k, j)).unwrap_or_default();
            match summand {
                Summand::Point => {}
                Summand::Segment { .. } => {
                    if got.len() != 2 {
                        return Err(Error::Compatibility(format!(
                            "segment summand at ray {} has {} ends",
                            k,
                            got.len()
                        )));
                    }
                    graph.edges.push([got[0], got[1]]);
                }
                Summand::Triangle { .. } => {
                    if got.len() != 3 {
                        return Err(Error::Compatibility(format!(
                            "triangle summand at ray {} has {} ends",
                            k,
                            got.len()
                        )));
                    }
                    let pos = [0, 1].map(|c| got.iter().map(|&i| graph.nodes[i].pos[c]).sum::<f64>() / 3.0);
                    let id = graph.add(NodeKind::Positive, None, pos);
                    for &e in &got {
                        graph.edges.push([id, e]);
                    }
                }
            }
        }
    }
    let census = GraphCensus {
        p: graph.count(NodeKind::Positive),
        n: graph.count(NodeKind::Negative),
        boundary: graph.count(NodeKind::Boundary),
    };
    Ok(GlobalDiscriminant {
        graph,
        pieces,
        census,
    })
}

/// Serializes a graph as `{nodes: [{id, kind, slab, pos}], edges: [[id, id]]}`.
pub fn export_json(graph: &DiscriminantGraph) -> Result<String> {
    serde_json::to_string_pretty(graph).map_err(|e| Error::Io(e.to_string()))
}

fn color(kind: NodeKind) -> &'static str {
    match kind {
        NodeKind::Negative => "#1f5fbf",
        NodeKind::Positive => "#c0392b",
        NodeKind::Boundary => "#222222",
        NodeKind::Attachment => "#999999",
    }
}

/// An SVG 1.1 drawing of the graph. With `slab` set only the nodes of that
/// slab and the edges between them are drawn.
pub fn render_svg(graph: &DiscriminantGraph, slab: Option<usize>) -> String {
    let keep: Vec<bool> = graph
        .nodes
        .iter()
        .map(|n| slab.map_or(true, |s| n.slab == Some(s)))
        .collect();
    let shown: Vec<&Node> = graph.nodes.iter().filter(|n| keep[n.id]).collect();
    let (mut lo, mut hi) = ([0.0f64, 0.0f64], [1.0f64, 1.0f64]);
    if let Some(first) = shown.first() {
        lo = first.pos;
        hi = first.pos;
        for n in &shown {
            for c in 0..2 {
                lo[c] = lo[c].min(n.pos[c]);
                hi[c] = hi[c].max(n.pos[c]);
            }
        }
    }
    let scale = 40.0;
    let margin = 20.0;
    let width = (hi[0] - lo[0]) * scale + 2.0 * margin;
    let height = (hi[1] - lo[1]) * scale + 2.0 * margin;
    let place = |p: [f64; 2]| -> (f64, f64) {
        (
            (p[0] - lo[0]) * scale + margin,
            height - ((p[1] - lo[1]) * scale + margin),
        )
    };
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{:.1}" height="{:.1}" viewBox="0 0 {:.1} {:.1}">"#,
        width, height, width, height
    );
    let _ = writeln!(out, r##"<g stroke="#555555" stroke-width="1.5" fill="none">"##);
    for [a, b] in &graph.edges {
        if !(keep[*a] && keep[*b]) {
            continue;
        }
        let (x1, y1) = place(graph.nodes[*a].pos);
        let (x2, y2) = place(graph.nodes[*b].pos);
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            x1, y1, x2, y2
        );
    }
    let _ = writeln!(out, "</g>");
    for n in shown {
        let (x, y) = place(n.pos);
        match n.kind {
            NodeKind::Boundary => {
                let _ = writeln!(
                    out,
                    r#"<rect x="{:.2}" y="{:.2}" width="6" height="6" fill="{}" class="boundary"/>"#,
                    x - 3.0,
                    y - 3.0,
                    color(n.kind)
                );
            }
            kind => {
                let class = match kind {
                    NodeKind::Negative => "negative",
                    NodeKind::Positive => "positive",
                    _ => "attachment",
                };
                let r = if kind == NodeKind::Attachment { 2.5 } else { 4.0 };
                let _ = writeln!(
                    out,
                    r#"<circle cx="{:.2}" cy="{:.2}" r="{}" fill="{}" class="{}"/>"#,
                    x,
                    y,
                    r,
                    color(kind),
                    class
                );
            }
        }
    }
    let _ = writeln!(out, "</svg>");
    out
}
