/// Number of sign changes in a sampled function, ignoring samples whose
/// magnitude is below `rel_floor` times the largest magnitude.
pub fn count_sign_changes(values: &[f64], rel_floor: f64) -> usize {
    let scale = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let floor = rel_floor * scale;
    let mut changes = 0;
    let mut last = 0.0_f64;
    for &v in values {
        if v.abs() <= floor {
            continue;
        }
        if last != 0.0 && v.signum() != last.signum() {
            changes += 1;
        }
        last = v;
    }
    changes
}
