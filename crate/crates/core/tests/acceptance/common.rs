use artin_core::{CoxeterSystem, Order};

/// The affine triangle group: three generators, every `m = 3`.
pub fn triangle() -> CoxeterSystem {
    let m3 = Order::Finite(3);
    CoxeterSystem::new(&["a", "b", "c"], &[("a", "b", m3), ("b", "c", m3), ("a", "c", m3)]).unwrap()
}

/// Turns a failed condition into an error message.
pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}
