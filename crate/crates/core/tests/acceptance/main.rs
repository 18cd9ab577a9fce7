//! End-to-end acceptance run: one line per criterion, non-zero exit if any
//! criterion fails.

mod adyan;
mod clef;
mod common;
mod conjugators;
mod coxeter_side;
mod garside_facts;
mod monoid;
mod quotient;
mod roots;

use std::process::ExitCode;
use std::time::Instant;

type Check = fn() -> Result<String, String>;

const CRITERIA: &[(u32, &str, Check)] = &[
    (1, "monoid operations agree with the word-class oracle", monoid::oracle_equivalence),
    (2, "Adyan normal forms are unique and greedy", adyan::normal_form),
    (3, "Garside element, its automorphism and right normal forms", garside_facts::garside_facts),
    (4, "positive conjugators are exactly the ribbon products", conjugators::ribbon_characterization),
    (5, "key factorization and normalizer round-trips", clef::round_trips),
    (6, "Deodhar decompositions and the normalizer split in W", coxeter_side::coxeter_side),
    (7, "Artin and Coxeter normalizer quotients agree", quotient::quotient_iso),
    (8, "root images are unique roots with a sign", roots::root_numerics),
];

fn main() -> ExitCode {
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for &(id, title, check) in CRITERIA {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS ({secs:.1}s) {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id}: FAIL ({secs:.1}s) {title}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
