//! Brute-force ground truth for small systems.
//!
//! Nothing here uses the normal forms of [`crate::artin`]: monoid elements
//! are connected components of the braid-move graph on words, and finite
//! Coxeter groups are enumerated as matrix groups.

mod ball;
mod group;
mod lcm;
mod reversing;

pub use ball::{Caps, ClassId, DivisorIndex, MonoidBall};
pub use group::GroupTable;
pub use reversing::Reverser;
pub use lcm::{verify_lcm_left, verify_lcm_right, words_equal, LcmAnswer, LcmIndex};

use alloc::vec::Vec;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::gens::Gen;

fn ball_for(sys: &CoxeterSystem, radius: usize) -> Result<MonoidBall> {
    MonoidBall::enumerate_with(sys, radius, Caps { max_radius: radius.max(Caps::default().max_radius), ..Caps::default() })
}

/// `a ≺ b` (or `b ≻ a` when `left` is false), decided on word classes.
pub fn oracle_divides(sys: &CoxeterSystem, a: &[Gen], b: &[Gen], left: bool) -> Result<bool> {
    let ball = ball_for(sys, a.len().max(b.len()))?;
    let (ca, cb) = (ball.class_of(a), ball.class_of(b));
    let (ca, cb) = ca.zip(cb).ok_or(Error::Internal("word outside its own ball"))?;
    Ok(if left { ball.divides_left(ca, cb) } else { ball.divides_right(ca, cb) })
}

/// Greatest common left divisor, as the least word of its class.
pub fn oracle_gcd(sys: &CoxeterSystem, a: &[Gen], b: &[Gen]) -> Result<Vec<Gen>> {
    let ball = ball_for(sys, a.len().max(b.len()))?;
    let (ca, cb) = ball.class_of(a).zip(ball.class_of(b)).ok_or(Error::Internal("word outside its own ball"))?;
    let g = ball.gcd_left(ca, cb).ok_or(Error::Internal("no greatest common divisor"))?;
    Ok(ball.rep(g))
}

/// Least common right multiple of length at most `radius`, as the least
/// word of its class; `None` when there is none that short.
pub fn oracle_lcm(sys: &CoxeterSystem, a: &[Gen], b: &[Gen], radius: usize) -> Result<Option<Vec<Gen>>> {
    let ball = ball_for(sys, radius.max(a.len()).max(b.len()))?;
    let (ca, cb) = ball.class_of(a).zip(ball.class_of(b)).ok_or(Error::Internal("word outside its own ball"))?;
    let index = LcmIndex::build(&ball, a.len().max(b.len()));
    match index.lcm_left(ca, cb) {
        LcmAnswer::Found(c) => Ok(Some(ball.rep(c))),
        LcmAnswer::NoneWithin(_) => Ok(None),
        LcmAnswer::Ambiguous => Err(Error::Internal("several minimal common multiples")),
    }
}
