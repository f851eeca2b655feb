//! Tiny dense linear algebra over a field context: reduced row echelon form
//! and nullspace bases for the handful of small systems the library needs
//! (projection-center annihilators, three-point Möbius interpolation).

use crate::gf::{Fe, FieldCtx};

/// Reduced row echelon form, in place. Returns the pivot column of each
/// nonzero row.
pub fn rref(ctx: &FieldCtx, rows: &mut Vec<Vec<Fe>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = ctx.inv(rows[r][col]).expect("pivot nonzero");
        for c in col..ncols {
            rows[r][c] = ctx.mul(rows[r][c], inv);
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col];
                for c in col..ncols {
                    let s = ctx.mul(f, rows[r][c]);
                    rows[i][c] = ctx.sub(rows[i][c], s);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Deterministic basis of the nullspace `{ v : A v = 0 }`: one vector per free
/// column, with a 1 in the free column and the pivot entries solved from the
/// echelon form.
pub fn nullspace(ctx: &FieldCtx, matrix: &[Vec<Fe>], ncols: usize) -> Vec<Vec<Fe>> {
    let mut rows: Vec<Vec<Fe>> = matrix.to_vec();
    let pivots = rref(ctx, &mut rows);
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![ctx.zero(); ncols];
        v[free] = ctx.one();
        for (row, &piv) in rows.iter().zip(&pivots) {
            v[piv] = ctx.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}
