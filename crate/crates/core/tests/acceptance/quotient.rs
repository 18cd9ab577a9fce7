use artin_core::oracle::GroupTable;
use artin_core::ribbons::quotient_iso_check;
use artin_core::{CoxeterSystem, Garside, GenSet};

use crate::common::ensure;

/// Runs the check and compares it with the oracle: `G_X` acts on `Π_X` by
/// permutations, the centralizer part is the kernel, so the quotient is the
/// image and must multiply like the report's table.
fn check(name: &str, x: &[&str], expected: Option<usize>) -> Result<String, String> {
    let sys = CoxeterSystem::preset(name).unwrap();
    let x: GenSet = x.iter().map(|s| sys.gen(s).unwrap()).collect();
    let gs = Garside::new(&sys).map_err(|e| e.to_string())?;
    let report = quotient_iso_check(&gs, x).map_err(|e| e.to_string())?;
    let table = GroupTable::build(&sys, 10_000).map_err(|e| e.to_string())?;
    let g_x = table.g_x(x);
    let perm = |w: u32| table.stabilizes(w, x).expect("element of G_X");
    let kernel = g_x.iter().filter(|&&w| perm(w).iter().all(|&(a, b)| a == b)).count();
    let label = format!("{name} X = {}", sys.format_set(x));
    ensure(report.g_x_order == g_x.len() && report.centralizer_order == kernel, || format!("{label}: orders differ"))?;
    ensure(report.order() * kernel == g_x.len(), || format!("{label}: |Q| = {}", report.order()))?;
    if let Some(e) = expected {
        ensure(report.order() == e, || format!("{label}: |Q| = {}, expected {e}", report.order()))?;
    }
    let perms: Vec<Vec<(usize, usize)>> = report.reps.iter().map(|w| perm(table.element_of(w.word()))).collect();
    let compose = |p: &[(usize, usize)], q: &[(usize, usize)]| -> Vec<(usize, usize)> {
        q.iter().map(|&(a, b)| (a, p.iter().find(|&&(c, _)| c == b).unwrap().1)).collect()
    };
    for i in 0..perms.len() {
        for j in 0..perms.len() {
            let k = report.table[i][j];
            ensure(compose(&perms[i], &perms[j]) == perms[k], || format!("{label}: table entry ({i},{j}) is wrong"))?;
        }
    }
    Ok(format!("{label}: |G_X| = {}, |Q| = {}, {} checks", g_x.len(), report.order(), report.checks))
}

/// Criterion 7.
pub fn quotient_iso() -> Result<String, String> {
    let parts = [
        check("A3", &["s1", "s3"], Some(2))?,
        check("A2", &["s1"], Some(1))?,
        check("A3", &["s1"], None)?,
    ];
    Ok(parts.join("; "))
}
