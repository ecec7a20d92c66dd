//! JSON encodings of field elements, functionals and matrices.
//!
//! Field elements are written as their index (the base-p number formed by
//! the polynomial-basis coordinates); matrices use the text format of
//! `exactalg::textfmt`.

use liejordan::exactalg::textfmt::format_matrix;
use liejordan::exactalg::FiniteField;
use liejordan::groupalg::{DualElement, MatrixGroup};
use liejordan::rootdata::RootDatum;
use liejordan::Matrix;
use serde_json::{json, Value};

pub fn elements<F: FiniteField>(v: &[F]) -> Vec<usize> {
    v.iter().map(|x| x.index()).collect()
}

pub fn matrix<F: FiniteField>(m: &Matrix<F>) -> String {
    format_matrix(m)
}

pub fn int_rows(m: &Matrix<i64>) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

pub fn functional<F: FiniteField>(g: &MatrixGroup<F>, x: &DualElement<F>) -> Value {
    json!({
        "values": elements(&x.values),
        "representative": matrix(&g.representative(x)),
    })
}

pub fn root(d: &RootDatum, k: usize) -> Vec<i64> {
    d.root(k).to_vec()
}

pub fn roots(d: &RootDatum, ks: &[usize]) -> Vec<Vec<i64>> {
    ks.iter().map(|&k| root(d, k)).collect()
}
