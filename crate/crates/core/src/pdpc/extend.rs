use crate::graph::Vertex;

use super::StepError;

/// Threads a Hamiltonian path of every unused layer into the first path of
/// `cover`.
///
/// For each layer `j` in turn an edge `a`–`b` of the path is replaced by
/// `a, ham_j(a*, b*), b` where `x*` is the matching partner of `x` in `j`.
/// The first cut is the first edge; each later cut is the first edge of the
/// segment inserted just before.
pub fn extend_through_empty_layers(
    cover: &mut [Vec<Vertex>],
    unused: &[usize],
    mut partner: impl FnMut(Vertex, usize) -> Result<Vertex, StepError>,
    mut ham: impl FnMut(usize, Vertex, Vertex) -> Result<Vec<Vertex>, StepError>,
) -> Result<(), StepError> {
    if unused.is_empty() {
        return Ok(());
    }
    let path = cover
        .first_mut()
        .filter(|p| p.len() >= 2)
        .ok_or_else(|| StepError::Internal("no edge to extend through".into()))?;
    let mut cut = 0;
    for &j in unused {
        let (a, b) = (path[cut], path[cut + 1]);
        let seg = ham(j, partner(a, j)?, partner(b, j)?)?;
        if seg.len() < 2 {
            return Err(StepError::Internal(format!("layer {j} gave a trivial segment")));
        }
        path.splice(cut + 1..cut + 1, seg);
        cut += 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nests_segments() {
        // layers of four: partner of v in layer j is 4j + v % 4, ham is a
        // fixed walk of the layer
        let mut cover = vec![vec![0, 1, 2, 3]];
        let partner = |v: Vertex, j: usize| Ok(4 * j + v % 4);
        let ham = |j: usize, a: Vertex, b: Vertex| {
            let base = 4 * j;
            assert_eq!((a - base, b - base), if j == 1 { (0, 1) } else { (0, 3) });
            Ok(if j == 1 {
                vec![base, base + 3, base + 2, base + 1]
            } else {
                vec![base, base + 1, base + 2, base + 3]
            })
        };
        extend_through_empty_layers(&mut cover, &[1, 2], partner, ham).unwrap();
        assert_eq!(cover[0], vec![0, 4, 8, 9, 10, 11, 7, 6, 5, 1, 2, 3]);
    }
}
