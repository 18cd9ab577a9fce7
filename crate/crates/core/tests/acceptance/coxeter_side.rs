use artin_core::oracle::GroupTable;
use artin_core::{CoxeterSystem, Error, GenSet};

use crate::common::ensure;

/// `Y` with `w⁻¹·Π_X = Π_Y`, from the oracle's matrices.
fn oracle_transport(table: &GroupTable, w: u32, x: GenSet) -> Option<GenSet> {
    let inv = table.inverse(w);
    let n = table.rank();
    x.iter()
        .map(|s| {
            let mut e = vec![0.0; n];
            e[s] = 1.0;
            let v = table.act(inv, &e);
            let y = v.iter().position(|&c| (c - 1.0).abs() < 1e-6)?;
            v.iter().enumerate().all(|(i, &c)| i == y || c.abs() < 1e-6).then_some(y)
        })
        .collect()
}

fn deodhar(name: &str) -> Result<usize, String> {
    let sys = CoxeterSystem::preset(name).unwrap();
    let table = GroupTable::build(&sys, 10_000).map_err(|e| e.to_string())?;
    let mut count = 0;
    for id in 0..table.order() as u32 {
        let w = sys.element(table.word(id)).unwrap();
        for x in sys.all().subsets() {
            let transport = oracle_transport(&table, id, x);
            for y in sys.all().subsets() {
                let expected = transport == Some(y);
                ensure(sys.transports_pi(&w, x, y) == expected, || format!("{name}: transporter test disagrees at {w:?}"))?;
                let steps = match sys.deodhar_decompose(&w, x, y) {
                    Ok(steps) => steps,
                    Err(Error::NotPiTransporter) if !expected => continue,
                    Err(e) => return Err(format!("{name}: {e} for w = {:?}, X = {x:?}, Y = {y:?}", w.word())),
                };
                ensure(expected, || format!("{name}: decomposed a non-transporter"))?;
                let total: usize = steps.iter().map(|s| s.element.len()).sum();
                let product = steps.iter().fold(sys.element(&[]).unwrap(), |acc, s| sys.mul(&acc, &s.element));
                let chained = steps.windows(2).all(|p| p[0].target == p[1].origin)
                    && steps.first().map_or(x == y, |s| s.origin == x)
                    && steps.last().is_none_or(|s| s.target == y);
                ensure(total == w.len() && product == w && chained, || {
                    format!("{name}: bad decomposition of {:?} from {x:?} to {y:?}", w.word())
                })?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn semidirect(name: &str) -> Result<usize, String> {
    let sys = CoxeterSystem::preset(name).unwrap();
    let table = GroupTable::build(&sys, 10_000).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for x in sys.all().subsets() {
        let normalizer = table.normalizer(x);
        let g_x = table.g_x(x);
        let w_x = table.subgroup_mask(x);
        let w_x_order = w_x.iter().filter(|&&b| b).count();
        let trivial_meet = g_x.iter().filter(|&&g| w_x[g as usize]).count() == 1;
        ensure(normalizer.len() == g_x.len() * w_x_order && trivial_meet, || format!("{name}: |N| ≠ |G_X|·|W_X| at {x:?}"))?;
        for id in 0..table.order() as u32 {
            let w = sys.element(table.word(id)).unwrap();
            let member = normalizer.contains(&id);
            match sys.normalizer_decompose_w(&w, x) {
                Ok((g, u)) => {
                    let gid = table.element_of(g.word());
                    let ok = member && sys.mul(&g, &u) == w && g_x.contains(&gid) && w_x[table.element_of(u.word()) as usize];
                    ensure(ok, || format!("{name}: bad split of {:?} for {x:?}", w.word()))?;
                }
                Err(Error::NotInNormalizer) => ensure(!member, || format!("{name}: refused {:?} for {x:?}", w.word()))?,
                Err(e) => return Err(e.to_string()),
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Criterion 6.
pub fn coxeter_side() -> Result<String, String> {
    let a3 = deodhar("A3")?;
    let b3 = deodhar("B3")?;
    let split = semidirect("A3")?;
    Ok(format!("Deodhar: A3 {a3}, B3 {b3} transporters; semidirect split: A3 {split} (w, X) pairs"))
}
