use crate::error::TwistedError;
use crate::ring::{GroupRingElem, RingMatrix};

/// Transformations of a presentation matrix that preserve every `E_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixMove {
    /// column `i` += column `j` · `r`
    M1 { i: usize, j: usize, r: GroupRingElem },
    /// row `i` += `r` · row `j`
    M2 { i: usize, j: usize, r: GroupRingElem },
    /// append a zero row
    M3,
    /// `diag(M, 1)`
    M4,
}

pub fn apply_move(m: &RingMatrix, mv: &MatrixMove) -> Result<RingMatrix, TwistedError> {
    let g = m.group();
    let check = |i: usize, j: usize, bound: usize, what: &str| {
        if i >= bound || j >= bound || i == j {
            Err(TwistedError::MoveIndex(format!("{what} ({i}, {j}) with {bound} {what}s")))
        } else {
            Ok(())
        }
    };
    let mut out;
    match mv {
        MatrixMove::M1 { i, j, r } => {
            check(*i, *j, m.cols(), "column")?;
            out = m.clone();
            for row in 0..m.rows() {
                let v = m.get(row, *i).try_add(&m.get(row, *j).try_mul(r)?)?;
                out.set(row, *i, v);
            }
        }
        MatrixMove::M2 { i, j, r } => {
            check(*i, *j, m.rows(), "row")?;
            out = m.clone();
            for col in 0..m.cols() {
                let v = m.get(*i, col).try_add(&r.try_mul(m.get(*j, col))?)?;
                out.set(*i, col, v);
            }
        }
        MatrixMove::M3 => {
            out = RingMatrix::zeros(g, m.rows() + 1, m.cols());
            copy_into(m, &mut out);
        }
        MatrixMove::M4 => {
            out = RingMatrix::zeros(g, m.rows() + 1, m.cols() + 1);
            copy_into(m, &mut out);
            out.set(m.rows(), m.cols(), GroupRingElem::one(g));
        }
    }
    Ok(out)
}

fn copy_into(m: &RingMatrix, out: &mut RingMatrix) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, m.get(i, j).clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::AbelianGroup;

    #[test]
    fn shapes_and_errors() {
        let g = AbelianGroup::cyclic(3).unwrap().arc();
        let m = RingMatrix::identity(&g, 2);
        assert_eq!(apply_move(&m, &MatrixMove::M3).unwrap().rows(), 3);
        let s = apply_move(&m, &MatrixMove::M4).unwrap();
        assert_eq!((s.rows(), s.cols()), (3, 3));
        assert!(s.get(2, 2).is_one());
        let zero = GroupRingElem::zero(&g);
        assert_eq!(apply_move(&m, &MatrixMove::M1 { i: 0, j: 1, r: zero.clone() }).unwrap(), m);
        assert!(apply_move(&m, &MatrixMove::M1 { i: 0, j: 2, r: zero.clone() }).is_err());
        assert!(apply_move(&m, &MatrixMove::M2 { i: 1, j: 1, r: zero }).is_err());
        let u = GroupRingElem::gen_pow(&g, 0, 1);
        let r = apply_move(&m, &MatrixMove::M2 { i: 0, j: 1, r: u.clone() }).unwrap();
        assert_eq!(r.get(0, 1), &u);
    }
}
