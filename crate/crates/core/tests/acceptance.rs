//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion; runs
//! without the libtest harness so the lines are never captured.
//!
//! Criterion 6d asks for F_5 with q = 3, but 3 + 3^-1 = 0 in F_5, so there
//! is no ring map from A and the field is rejected. That line stays red; the
//! test only tolerates it while the rejection is the reason.

use c2webs::selftest::{self, Outcome};

const KNOWN_RED: &[(&str, &str)] = &[("6d", "q + q^-1 = 0")];

fn judge(outcomes: &[Outcome], red: &mut Vec<String>) {
    for o in outcomes {
        println!("{}", o.line());
        let known = KNOWN_RED.iter().find(|(id, _)| *id == o.id);
        match (o.passed(), known) {
            (true, None) => {}
            (true, Some(_)) => red.push(format!("{} passed but is recorded as degenerate", o.id)),
            (false, Some((_, why))) if o.report.witnesses.iter().all(|w| w.contains(why)) => {
                println!("  known red: {why}");
            }
            (false, _) => red.push(format!("{}: {:?}", o.id, o.report.witnesses)),
        }
    }
}

fn main() {
    let seed = selftest::seed_from_env();
    println!("cellularity seed {seed}");
    let mut red = Vec::new();
    judge(&[selftest::relations()], &mut red);
    judge(&[selftest::intertwiners()], &mut red);
    judge(&[selftest::golden_tables()], &mut red);
    judge(&[selftest::combinatorics()], &mut red);
    judge(&[selftest::triangularity(5)], &mut red);
    judge(&selftest::basis_theorem(3), &mut red);
    judge(&[selftest::cellularity(4, seed, 2)], &mut red);
    judge(&[selftest::duality_cross_check()], &mut red);
    if !red.is_empty() {
        eprintln!("unexpected criterion results:\n{}", red.join("\n"));
        std::process::exit(1);
    }
    println!("acceptance: all criteria as expected");
}
