use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::classify::{is_forbidden, is_hcu_sequence, l2};
use crate::degseq::{graphic_sequences, DegreeSequence};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::realize::enumerate_realizations;
use crate::split::{inverse, ks_partitions, CrossDegreePair};
use crate::tyshkevich::is_indecomposable;

/// Rao-minimal forbidden sequences only exist up to this length.
pub const RAO_MIN_MAX_TERMS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    NonSplit,
    Split,
}

impl Mode {
    pub fn start_level(self) -> usize {
        match self {
            Mode::NonSplit => 5,
            Mode::Split => 8,
        }
    }

    fn accepts(self, seq: &DegreeSequence) -> bool {
        seq.is_split_unchecked() == (self == Mode::Split)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchState {
    pub mode: Mode,
    pub n: usize,
    pub selected: BTreeMap<usize, Vec<DegreeSequence>>,
    pub minimal: BTreeMap<usize, Vec<Graph>>,
    pub done: bool,
}

impl SearchState {
    fn start(mode: Mode) -> Result<SearchState> {
        let n = mode.start_level();
        let rao = rao_min(n)?;
        let selected = rao.iter().filter(|s| mode.accepts(s)).cloned().collect();
        let mut minimal = BTreeSet::new();
        for s in &rao {
            minimal.extend(enumerate_realizations(s)?);
        }
        Ok(SearchState {
            mode,
            n,
            selected: BTreeMap::from([(n, selected)]),
            minimal: BTreeMap::from([(n, minimal.into_iter().collect())]),
            done: false,
        })
    }

    fn minimal_at(&self, n: usize) -> &[Graph] {
        self.minimal.get(&n).map_or(&[], Vec::as_slice)
    }

    fn finished(&self) -> bool {
        self.n > self.mode.start_level() && self.minimal_at(self.n - 1).is_empty() && self.minimal_at(self.n).is_empty()
    }

    /// Union of all minimal levels, canonical and sorted.
    pub fn minimal_graphs(&self) -> Vec<Graph> {
        let all: BTreeSet<Graph> = self.minimal.values().flatten().cloned().collect();
        all.into_iter().collect()
    }

    /// Minimal graphs whose degree sequence is not one of the Rao-minimal ones.
    pub fn extra_graphs(&self) -> Vec<Graph> {
        let rao: HashSet<DegreeSequence> = l2().into_iter().collect();
        self.minimal_graphs().into_iter().filter(|g| !rao.contains(&g.degree_sequence())).collect()
    }
}

/// Every forbidden sequence of length `n` whose graphic decrementations are all in the closure.
pub fn rao_min(n: usize) -> Result<Vec<DegreeSequence>> {
    if n > RAO_MIN_MAX_TERMS + 1 {
        return Err(Error::CapacityExceeded { what: "Rao-minimal scan", limit: RAO_MIN_MAX_TERMS + 1, got: n });
    }
    let mut out = Vec::new();
    for s in graphic_sequences(n) {
        if is_forbidden(&s)? && s.graphic_decrementations().iter().all(|d| !is_forbidden(d).unwrap_or(true)) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Whether every graphic sequence strictly Rao-below the forbidden sequence `seq` is in the
/// closure, found by walking the whole decrementation closure.
pub fn verify_rao_minimal(seq: &DegreeSequence) -> Result<bool> {
    if !is_forbidden(seq)? {
        return Err(Error::Precondition(format!("{seq} is not forbidden")));
    }
    let mut seen = HashSet::new();
    let mut stack = seq.graphic_decrementations();
    while let Some(s) = stack.pop() {
        if s.is_empty() || !seen.insert(s.clone()) {
            continue;
        }
        if is_forbidden(&s)? {
            return Ok(false);
        }
        stack.extend(s.graphic_decrementations().into_iter().filter(|d| !seen.contains(d)));
    }
    Ok(true)
}

/// The sequence of the inverse, read off the unique KS-partition of an indecomposable split sequence.
pub fn inverse_sequence(seq: &DegreeSequence) -> Option<DegreeSequence> {
    if !seq.is_split_unchecked() || seq.len() < 2 {
        return None;
    }
    let pair = CrossDegreePair::from_split_sequence(seq);
    let both = pair.to_sequences();
    Some(both.iter().find(|s| *s != seq).unwrap_or(&both[0]).clone())
}

/// Lexicographically least member of the sequence's class under complement (and inversion in split mode).
pub fn class_key(seq: &DegreeSequence, mode: Mode) -> DegreeSequence {
    let mut class = vec![seq.clone(), seq.complement()];
    if mode == Mode::Split {
        if let Some(inv) = inverse_sequence(seq) {
            class.push(inv.complement());
            class.push(inv);
        }
    }
    class.into_iter().min().expect("nonempty class")
}

/// Indecomposable, outside the closure, and every one-vertex-deleted subgraph inside it.
pub fn is_minimal_forbidden(g: &Graph) -> Result<bool> {
    if g.n() == 0 || !is_indecomposable(g)? || is_hcu_sequence(&g.degree_sequence())? {
        return Ok(false);
    }
    for v in 0..g.n() {
        if !is_hcu_sequence(&g.delete_vertex(v).degree_sequence())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Run the level-by-level search until two consecutive levels have no minimal graphs, or until
/// level `cap` is complete. With a checkpoint path the state is resumed from it when present and
/// rewritten after every level.
pub fn run_search(mode: Mode, cap: usize, checkpoint: Option<&Path>) -> Result<SearchState> {
    if cap < mode.start_level() {
        return Err(Error::Precondition(format!("cap {cap} is below the start level {}", mode.start_level())));
    }
    let mut state = match checkpoint.filter(|p| p.exists()) {
        Some(p) => {
            let s = read_checkpoint(p)?;
            if s.mode != mode {
                return Err(Error::Precondition(format!("checkpoint {} holds a {} search", p.display(), s.mode)));
            }
            s
        }
        None => SearchState::start(mode)?,
    };
    if let Some(p) = checkpoint {
        write_checkpoint(p, &state)?;
    }
    while !state.finished() {
        if state.n >= cap {
            return Ok(state);
        }
        advance(&mut state)?;
        if let Some(p) = checkpoint {
            write_checkpoint(p, &state)?;
        }
    }
    state.done = true;
    if let Some(p) = checkpoint {
        write_checkpoint(p, &state)?;
    }
    Ok(state)
}

fn advance(state: &mut SearchState) -> Result<()> {
    let n = state.n + 1;
    let mode = state.mode;
    let previous: HashSet<DegreeSequence> = state.selected[&state.n].iter().cloned().collect();

    let mut forbidden: BTreeSet<DegreeSequence> = BTreeSet::new();
    if n <= RAO_MIN_MAX_TERMS {
        forbidden.extend(rao_min(n)?);
    }
    for s in &previous {
        forbidden.extend(s.all_augmentations().into_iter().filter(DegreeSequence::is_graphic));
    }
    let selected: Vec<DegreeSequence> = forbidden.into_iter().filter(|s| mode.accepts(s)).collect();

    let mut representatives = BTreeSet::new();
    for s in &selected {
        if !s.is_decomposable_unchecked() {
            representatives.insert(class_key(s, mode));
        }
    }
    let representatives: Vec<DegreeSequence> = representatives.into_iter().collect();

    let found: Vec<Vec<Graph>> = representatives
        .par_iter()
        .map(|s| minimal_realizations(s, mode, &previous))
        .collect::<Result<_>>()?;
    let minimal: BTreeSet<Graph> = found.into_iter().flatten().collect();

    state.n = n;
    state.selected.insert(n, selected);
    state.minimal.insert(n, minimal.into_iter().collect());
    Ok(())
}

/// Realizations of `seq` with no one-vertex-deleted subgraph realizing a sequence of `previous`,
/// together with their complements, and in split mode their inverses and inverse-complements.
fn minimal_realizations(seq: &DegreeSequence, mode: Mode, previous: &HashSet<DegreeSequence>) -> Result<Vec<Graph>> {
    let values = seq.distinct_values().len();
    let down = seq.graphic_decrementations().into_iter().filter(|d| !previous.contains(d)).count();
    if down < values {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for g in enumerate_realizations(seq)? {
        if (0..g.n()).any(|v| previous.contains(&g.delete_vertex(v).degree_sequence())) {
            continue;
        }
        out.push(g.complement().canonical());
        if mode == Mode::Split {
            if let Some(p) = ks_partitions(&g).first() {
                let inv = inverse(&g, p)?;
                out.push(inv.complement().canonical());
                out.push(inv.canonical());
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// Minimal graphs of the given searches plus every realization of the Rao-minimal sequences;
/// errors unless every search has terminated.
pub fn assemble_y(states: &[&SearchState]) -> Result<Vec<Graph>> {
    if let Some(s) = states.iter().find(|s| !s.done) {
        return Err(Error::Precondition(format!("the {} search stopped at level {} before terminating", s.mode, s.n)));
    }
    collect_y(states)
}

/// Same union without the termination requirement, for capped runs.
pub fn collect_y(states: &[&SearchState]) -> Result<Vec<Graph>> {
    let mut all = BTreeSet::new();
    for s in l2() {
        all.extend(enumerate_realizations(&s)?);
    }
    for st in states {
        all.extend(st.minimal_graphs());
    }
    let mut out: Vec<Graph> = all.into_iter().collect();
    out.sort_by_key(|g| (g.n(), g.edge_count(), g.to_graph6()));
    Ok(out)
}

/// One graph6 per line after `#` comment lines.
pub fn y_artifact_text(graphs: &[Graph], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for g in graphs {
        out.push_str(&g.to_graph6());
        out.push('\n');
    }
    out
}

pub fn write_checkpoint(path: &Path, state: &SearchState) -> Result<()> {
    let mut text = format!("MODE {}\nCURRENT {}\nDONE {}\n", state.mode, state.n, state.done);
    for (level, selected) in &state.selected {
        text.push_str(&format!("LEVEL {level}\nSELECTED:\n"));
        for s in selected {
            text.push_str(&format!("{s}\n"));
        }
        text.push_str("MINIMAL:\n");
        for g in state.minimal_at(*level) {
            text.push_str(&format!("{}\n", g.to_graph6()));
        }
    }
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn read_checkpoint(path: &Path) -> Result<SearchState> {
    let text = fs::read_to_string(path)?;
    let bad = |line: &str| Error::Parse(format!("checkpoint {}: unexpected line {line:?}", path.display()));
    let mut mode = None;
    let mut current = None;
    let mut done = false;
    let mut selected = BTreeMap::new();
    let mut minimal = BTreeMap::new();
    let mut level = None;
    let mut section = "";
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if let Some(m) = line.strip_prefix("MODE ") {
            mode = Some(m.parse::<Mode>()?);
        } else if let Some(c) = line.strip_prefix("CURRENT ") {
            current = Some(c.parse::<usize>().map_err(|_| bad(line))?);
        } else if let Some(d) = line.strip_prefix("DONE ") {
            done = d == "true";
        } else if let Some(l) = line.strip_prefix("LEVEL ") {
            let l = l.parse::<usize>().map_err(|_| bad(line))?;
            selected.insert(l, Vec::new());
            minimal.insert(l, Vec::new());
            level = Some(l);
            section = "";
        } else if line == "SELECTED:" || line == "MINIMAL:" {
            section = if line == "SELECTED:" { "selected" } else { "minimal" };
        } else {
            let l = level.ok_or_else(|| bad(line))?;
            match section {
                "selected" => selected.get_mut(&l).expect("level opened").push(line.parse()?),
                "minimal" => minimal.get_mut(&l).expect("level opened").push(Graph::from_graph6(line)?),
                _ => return Err(bad(line)),
            }
        }
    }
    let mode = mode.ok_or_else(|| Error::Parse(format!("checkpoint {} has no MODE line", path.display())))?;
    let n = current.or_else(|| selected.keys().last().copied()).ok_or_else(|| bad("no levels"))?;
    if !selected.contains_key(&n) {
        return Err(bad("CURRENT names a missing level"));
    }
    Ok(SearchState { mode, n, selected, minimal, done })
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::NonSplit => "nonsplit",
            Mode::Split => "split",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "nonsplit" | "non-split" => Ok(Mode::NonSplit),
            "split" => Ok(Mode::Split),
            _ => Err(Error::Parse(format!("unknown search mode {s:?}"))),
        }
    }
}
