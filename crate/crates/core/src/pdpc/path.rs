use crate::graph::Vertex;

use super::StepError;

fn missing(v: Vertex) -> StepError {
    StepError::Internal(format!("vertex {v} is not on the expected path"))
}

pub(crate) fn pos(path: &[Vertex], v: Vertex) -> Result<usize, StepError> {
    path.iter().position(|&x| x == v).ok_or_else(|| missing(v))
}

pub(crate) fn pred(path: &[Vertex], v: Vertex) -> Result<Vertex, StepError> {
    match pos(path, v)? {
        0 => Err(StepError::Internal(format!("vertex {v} has no predecessor"))),
        i => Ok(path[i - 1]),
    }
}

pub(crate) fn succ(path: &[Vertex], v: Vertex) -> Result<Vertex, StepError> {
    let i = pos(path, v)?;
    path.get(i + 1)
        .copied()
        .ok_or_else(|| StepError::Internal(format!("vertex {v} has no successor")))
}

/// Index of the path containing `v`.
pub(crate) fn containing(paths: &[Vec<Vertex>], v: Vertex) -> Result<usize, StepError> {
    paths.iter().position(|p| p.contains(&v)).ok_or_else(|| missing(v))
}

/// Prefix up to and including `v`.
pub(crate) fn upto(path: &[Vertex], v: Vertex) -> Result<Vec<Vertex>, StepError> {
    Ok(path[..=pos(path, v)?].to_vec())
}

/// Suffix from `v` on.
pub(crate) fn from(path: &[Vertex], v: Vertex) -> Result<Vec<Vertex>, StepError> {
    Ok(path[pos(path, v)?..].to_vec())
}

/// Drops the vertices strictly between `x` and `y`, leaving them adjacent.
pub(crate) fn cut(path: &[Vertex], x: Vertex, y: Vertex) -> Result<Vec<Vertex>, StepError> {
    let (i, j) = (pos(path, x)?, pos(path, y)?);
    if i >= j {
        return Err(StepError::Internal(format!("cannot cut between {x} and {y}")));
    }
    let mut out = path[..=i].to_vec();
    out.extend_from_slice(&path[j..]);
    Ok(out)
}

pub(crate) fn reversed(mut path: Vec<Vertex>) -> Vec<Vertex> {
    path.reverse();
    path
}

/// Replaces the edge `x`–`y` of `path` (either orientation) by
/// `x, segment…, y`.
pub(crate) fn insert_between(
    path: &mut Vec<Vertex>,
    x: Vertex,
    y: Vertex,
    segment: Vec<Vertex>,
) -> Result<(), StepError> {
    let i = pos(path, x)?;
    let (at, seg) = if path.get(i + 1) == Some(&y) {
        (i + 1, segment)
    } else if i > 0 && path[i - 1] == y {
        (i, reversed(segment))
    } else {
        return Err(StepError::Internal(format!("{x} and {y} are not consecutive")));
    };
    path.splice(at..at, seg);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn navigation() {
        let p = vec![4, 7, 1, 9];
        assert_eq!(pred(&p, 1).unwrap(), 7);
        assert_eq!(succ(&p, 1).unwrap(), 9);
        assert!(pred(&p, 4).is_err());
        assert!(succ(&p, 9).is_err());
        assert_eq!(cut(&p, 4, 9).unwrap(), vec![4, 9]);
        assert_eq!(upto(&p, 7).unwrap(), vec![4, 7]);
        assert_eq!(from(&p, 1).unwrap(), vec![1, 9]);
    }

    #[test]
    fn insertion_respects_orientation() {
        let mut p = vec![1, 2, 3];
        insert_between(&mut p, 2, 3, vec![8, 9]).unwrap();
        assert_eq!(p, vec![1, 2, 8, 9, 3]);
        let mut p = vec![1, 2, 3];
        insert_between(&mut p, 2, 1, vec![8, 9]).unwrap();
        assert_eq!(p, vec![1, 9, 8, 2, 3]);
        assert!(insert_between(&mut p, 1, 3, vec![5]).is_err());
    }
}
