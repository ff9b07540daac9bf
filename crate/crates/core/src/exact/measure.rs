use crate::instance::Instance;

/// Weight of a marked vertex of degree exactly 3.
pub const MARKED_DEGREE3_WEIGHT: f64 = 0.2;

/// Tolerance for comparing sums of vertex weights.
pub const MEASURE_EPS: f64 = 1e-9;

/// Weight of an alive vertex: free vertices and marked vertices of degree
/// at least 4 weigh 1, marked degree-3 vertices weigh 0.2, marked vertices
/// of degree at most 2 weigh nothing.
pub fn vertex_weight(inst: &Instance, v: usize) -> f64 {
    if inst.is_free(v) {
        return 1.0;
    }
    match inst.degree(v) {
        0..=2 => 0.0,
        3 => MARKED_DEGREE3_WEIGHT,
        _ => 1.0,
    }
}

pub fn measure(inst: &Instance) -> f64 {
    inst.alive().iter().map(|v| vertex_weight(inst, v)).sum()
}
