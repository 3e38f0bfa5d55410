use super::{build_projection, EmbeddingMatrix, ProjectionMatrix};
use crate::error::{Error, Result};
use crate::graph::EdgeList;
use crate::labeling::LabelVector;

/// Reference GEE: one in-order pass over the listed edges.
///
/// For each `(u, v, w)`, `Z[u, Y(v)] += W(v, Y(v)) · w` and
/// `Z[v, Y(u)] += W(u, Y(u)) · w`; an update towards an unlabeled endpoint is
/// skipped. The result is bitwise reproducible for a fixed edge order.
pub fn embed_serial(el: &EdgeList, y: &LabelVector) -> Result<EmbeddingMatrix> {
    if el.n() != y.len() {
        return Err(Error::Contract(format!(
            "graph has {} nodes but {} labels",
            el.n(),
            y.len()
        )));
    }
    embed_serial_with(el, &build_projection(y))
}

/// [`embed_serial`] with a prebuilt projection.
pub fn embed_serial_with(el: &EdgeList, w: &ProjectionMatrix) -> Result<EmbeddingMatrix> {
    if el.n() != w.n() {
        return Err(Error::Contract(format!(
            "graph has {} nodes but projection has {}",
            el.n(),
            w.n()
        )));
    }
    let k = w.k();
    let labels = w.labels();
    let scale = w.scales();
    let mut z = EmbeddingMatrix::zeros(el.n(), k);
    let zv = z.values_mut();
    for e in el.edges() {
        let (u, v) = (e.src as usize, e.dst as usize);
        let (lu, lv) = (labels[u] as usize, labels[v] as usize);
        if lv != 0 {
            zv[u * k + lv - 1] += scale[v] * e.weight;
        }
        if lu != 0 {
            zv[v * k + lu - 1] += scale[u] * e.weight;
        }
    }
    Ok(z)
}
