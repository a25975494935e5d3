//! Command-line front end: catalog, command runners and report formatting.

pub mod catalog;
pub mod commands;
pub mod report;

use std::sync::Mutex;

use anyhow::Result;

use catalog::CatalogEntry;
use commands::{Command, Settings};
use report::Report;

/// Runs `cmd` on one algebra by catalog name or file path.
pub fn run_one(cmd: &Command, name: &str, s: &Settings) -> Result<Report> {
    let (entry, built) = catalog::resolve(name, s.degree_bound)?;
    commands::run(cmd, &entry, &built, s)
}

/// Finite-dimensional entries with ε(λ) ≠ 0 for a left integral λ.
fn semisimple(name: &str) -> bool {
    hopfwind::fd::by_name(name)
        .and_then(|h| hopfwind::fd::structure::left_integral(&h).ok().map(|l| !h.counit_of(&l).is_zero()))
        .unwrap_or(false)
}

/// Catalog entries the command applies to when NAME is `all`.
pub fn applicable(cmd: &Command) -> Vec<CatalogEntry> {
    use catalog::FamilyTag::*;
    catalog::entries()
        .into_iter()
        .filter(|e| {
            let has_pi0 = e.family != Quantum || e.name.starts_with("oq-sl-");
            match cmd {
                Command::Axioms => true,
                Command::Radford => e.family == Fd,
                Command::Integral(commands::Method::Descent) | Command::Nakayama => has_pi0,
                Command::Integral(_) => matches!(e.family, Enveloping | Group | Laurent),
                Command::Hochschild(_) => e.family != Quantum,
                Command::Duality => e.family != Quantum && (e.family != Fd || semisimple(&e.name)),
            }
        })
        .collect()
}

/// Runs `cmd` on every applicable entry with up to `jobs` threads; output is in
/// catalog order regardless of scheduling.
pub fn run_all(cmd: &Command, s: &Settings, jobs: usize) -> Vec<(String, Result<Report>)> {
    let entries = applicable(cmd);
    let next = Mutex::new(0usize);
    let slots: Vec<Mutex<Option<Result<Report>>>> = entries.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(entries.len().max(1)) {
            scope.spawn(|| loop {
                let i = {
                    let mut n = next.lock().expect("queue lock");
                    let i = *n;
                    *n += 1;
                    i
                };
                let Some(e) = entries.get(i) else { break };
                let out = catalog::build(e, s.degree_bound).and_then(|b| commands::run(cmd, e, &b, s));
                *slots[i].lock().expect("slot lock") = Some(out);
            });
        }
    });
    entries
        .into_iter()
        .zip(slots)
        .map(|(e, slot)| (e.name, slot.into_inner().expect("slot lock").expect("every entry ran")))
        .collect()
}
