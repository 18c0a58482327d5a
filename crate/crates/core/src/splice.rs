//! Splicing two assembly sequences across matching windows, and pumping.

use std::collections::HashSet;

use rayon::prelude::*;
use thiserror::Error;

use crate::dynamics::{attach_mut, run_trace, AssemblyTrace, AttachError, Placement, TraceError};
use crate::geometry::Point;
use crate::model::{Assembly, TileSystem};
use crate::movie::{bond_forming_submovie, extract_movie, movies_equal, MovieError, WindowMovie};
use crate::window::{Window, WindowError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SpliceMode {
    /// Compare and follow the full movies.
    #[default]
    Full,
    /// Compare and follow only the glues that end up forming bonds.
    BondForming,
}

/// Which attachment rule the spliced steps are checked against.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Validation {
    /// Plain aTAM rule of the system's dimension, ignoring diffusion.
    #[default]
    Unrestricted,
    /// The system's own variant, including any diffusion restriction.
    Strict,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpliceError {
    #[error("window movies differ")]
    MovieMismatch,
    #[error("spliced step {index} is invalid: {error}")]
    SpliceStepInvalid {
        index: usize,
        placement: Placement,
        error: AttachError,
    },
    #[error("trace {which} does not replay: {error}")]
    InvalidTrace { which: char, error: TraceError },
    #[error("the seeds lie on different sides of their windows")]
    SeedSidesDiffer,
    #[error("second window is not the first translated by c")]
    WindowsNotTranslates,
    #[error(transparent)]
    Window(#[from] WindowError),
}

impl SpliceError {
    pub fn kind(&self) -> &'static str {
        match self {
            SpliceError::MovieMismatch => "MovieMismatch",
            SpliceError::SpliceStepInvalid { .. } => "SpliceStepInvalid",
            SpliceError::InvalidTrace { .. } => "InvalidTrace",
            SpliceError::SeedSidesDiffer => "SeedSidesDiffer",
            SpliceError::WindowsNotTranslates => "WindowsNotTranslates",
            SpliceError::Window(_) => "InvalidWindow",
        }
    }
}

fn movie_error(which: char, e: MovieError) -> SpliceError {
    match e {
        MovieError::InvalidTrace(error) => SpliceError::InvalidTrace { which, error },
        MovieError::Window(w) => SpliceError::Window(w),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spliced {
    pub trace: AssemblyTrace,
    pub assembly: Assembly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpliceOptions {
    pub mode: SpliceMode,
    pub validation: Validation,
}

impl Default for SpliceOptions {
    fn default() -> Self {
        SpliceOptions {
            mode: SpliceMode::Full,
            validation: Validation::Unrestricted,
        }
    }
}

impl SpliceOptions {
    pub fn mode(mode: SpliceMode) -> Self {
        SpliceOptions {
            mode,
            ..Default::default()
        }
    }
}

fn validation_system(system: &TileSystem, v: Validation) -> TileSystem {
    match v {
        Validation::Unrestricted => system.with_variant(system.variant.unrestricted()),
        Validation::Strict => system.clone(),
    }
}

fn movie_for(
    system: &TileSystem,
    trace: &AssemblyTrace,
    result: &Assembly,
    window: &Window,
    mode: SpliceMode,
    which: char,
) -> Result<WindowMovie, SpliceError> {
    let m = extract_movie(system, trace, window).map_err(|e| movie_error(which, e))?;
    Ok(match mode {
        SpliceMode::Full => m,
        SpliceMode::BondForming => bond_forming_submovie(&m, result, &system.tiles),
    })
}

/// Splices `trace_a` (seed side of `window`) with `trace_b` (far side of
/// `window + c`), producing a sequence for `α_L ∪ (β_R − c)` in the frame of
/// `trace_a`.
///
/// Follows the merge of the two sequences driven by the shared movie, with
/// three adjustments: a movie entry whose tile is already in place is skipped,
/// the movie position is undefined once the movie is exhausted, and the tail
/// only emits steps from the half being kept.
pub fn splice(
    system: &TileSystem,
    trace_a: &AssemblyTrace,
    trace_b: &AssemblyTrace,
    window: &Window,
    c: Point,
    opts: SpliceOptions,
) -> Result<Spliced, SpliceError> {
    let alpha = run_trace(system, trace_a)
        .map_err(|error| SpliceError::InvalidTrace { which: 'A', error })?;
    let beta = run_trace(system, trace_b)
        .map_err(|error| SpliceError::InvalidTrace { which: 'B', error })?;
    let window_b = window.translate(c);
    let m_a = movie_for(system, trace_a, &alpha, window, opts.mode, 'A')?;
    let m_b = movie_for(system, trace_b, &beta, &window_b, opts.mode, 'B')?;
    if !movies_equal(&m_a, &m_b, c) {
        return Err(SpliceError::MovieMismatch);
    }
    let seed_inside = window.seed_side(&system.seed)?;
    if window_b.seed_side(&system.seed)? != seed_inside {
        return Err(SpliceError::SeedSidesDiffer);
    }
    let left = |p: Point| window.inside(p) == seed_inside;

    let a: &[Placement] = &trace_a.placements;
    let b: Vec<Placement> = trace_b.placements.iter().map(|p| p.translate(-c)).collect();
    let b_right: HashSet<Point> = b.iter().filter(|p| !left(p.pos)).map(|p| p.pos).collect();
    let a_left: HashSet<Point> = system
        .seed
        .points()
        .chain(a.iter().map(|p| p.pos))
        .filter(|&p| left(p))
        .collect();

    let vsys = validation_system(system, opts.validation);
    let mut gamma = system.seed.clone();
    let mut out: Vec<Placement> = Vec::with_capacity(a.len() + b.len());
    let emit =
        |p: Placement, gamma: &mut Assembly, out: &mut Vec<Placement>| -> Result<(), SpliceError> {
            attach_mut(gamma, p, &vsys).map_err(|error| SpliceError::SpliceStepInvalid {
                index: out.len(),
                placement: p,
                error,
            })?;
            out.push(p);
            Ok(())
        };

    let movie = &m_a.entries;
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < a.len() || j < b.len() {
        if k < movie.len() {
            let pos = movie[k].from;
            k += 1;
            if gamma.contains(pos) {
                continue;
            }
            if a_left.contains(&pos) {
                while i < a.len() && a[i].pos != pos {
                    if left(a[i].pos) {
                        emit(a[i], &mut gamma, &mut out)?;
                    }
                    i += 1;
                }
                if i < a.len() {
                    emit(a[i], &mut gamma, &mut out)?;
                    i += 1;
                }
            } else if b_right.contains(&pos) {
                while j < b.len() && b[j].pos != pos {
                    if !left(b[j].pos) {
                        emit(b[j], &mut gamma, &mut out)?;
                    }
                    j += 1;
                }
                if j < b.len() {
                    emit(b[j], &mut gamma, &mut out)?;
                    j += 1;
                }
            }
        } else {
            if i < a.len() {
                if left(a[i].pos) {
                    emit(a[i], &mut gamma, &mut out)?;
                }
                i += 1;
            }
            if j < b.len() {
                if !left(b[j].pos) {
                    emit(b[j], &mut gamma, &mut out)?;
                }
                j += 1;
            }
        }
    }
    Ok(Spliced {
        trace: AssemblyTrace::new(out),
        assembly: gamma,
    })
}

/// `α_L ∪ (β_R − c)` computed directly from the two results, for checking
/// splice output.
pub fn expected_splice_result(
    system: &TileSystem,
    alpha: &Assembly,
    beta: &Assembly,
    window: &Window,
    c: Point,
) -> Result<Assembly, SpliceError> {
    let seed_inside = window.seed_side(&system.seed)?;
    let left = alpha.restrict(|p| window.inside(p) == seed_inside);
    let right = beta
        .translate(-c)
        .restrict(|p| window.inside(p) != seed_inside);
    Ok(left.union(&right))
}

/// Scans `template + t` for each translation and returns the first pair
/// `(i, j)`, `i < j`, whose non-empty movies agree under `t_j − t_i`.
pub fn find_matching_window_pair(
    system: &TileSystem,
    trace: &AssemblyTrace,
    template: &Window,
    translations: &[Point],
) -> Result<Option<(Window, Window, Point)>, SpliceError> {
    let movies: Vec<(Window, WindowMovie)> = translations
        .par_iter()
        .map(|&t| {
            let w = template.translate(t);
            extract_movie(system, trace, &w)
                .map(|m| (w, m))
                .map_err(|e| movie_error('A', e))
        })
        .collect::<Result<_, _>>()?;
    for i in 0..movies.len() {
        if movies[i].1.is_empty() {
            continue;
        }
        for j in i + 1..movies.len() {
            let c = translations[j] - translations[i];
            if movies_equal(&movies[i].1, &movies[j].1, c) {
                return Ok(Some((movies[i].0.clone(), movies[j].0.clone(), c)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Repetitions {
    Count(usize),
    /// Keep pumping until an iteration cannot be spliced, at most
    /// `max_iterations` times.
    UntilBlocked {
        max_iterations: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PumpOutcome {
    pub trace: AssemblyTrace,
    pub assembly: Assembly,
    /// Completed splice iterations.
    pub iterations: usize,
    /// Set when an iteration failed and the partial-period continuation ran.
    pub blocked: bool,
}

/// Repeats the segment of `trace` between `w1` and `w2 = w1 + c`.
///
/// Iteration `k` splices the previous result over `w2 + (k − 1)c` with the
/// original trace over `w1`. In `UntilBlocked` mode, the first failing
/// iteration is replaced by replaying the far-side steps of the original
/// trace shifted by `k·c`, stopping at the first step that no longer fits;
/// this is how a pumped column runs into an obstacle.
pub fn pump(
    system: &TileSystem,
    trace: &AssemblyTrace,
    w1: &Window,
    w2: &Window,
    c: Point,
    reps: Repetitions,
    opts: SpliceOptions,
) -> Result<PumpOutcome, SpliceError> {
    if &w1.translate(c) != w2 {
        return Err(SpliceError::WindowsNotTranslates);
    }
    let base = run_trace(system, trace)
        .map_err(|error| SpliceError::InvalidTrace { which: 'A', error })?;
    let m1 = movie_for(system, trace, &base, w1, opts.mode, 'A')?;
    let m2 = movie_for(system, trace, &base, w2, opts.mode, 'A')?;
    if !movies_equal(&m1, &m2, c) {
        return Err(SpliceError::MovieMismatch);
    }
    let limit = match reps {
        Repetitions::Count(n) => n,
        Repetitions::UntilBlocked { max_iterations } => max_iterations,
    };
    let mut current = Spliced {
        trace: trace.clone(),
        assembly: base,
    };
    for k in 1..=limit {
        let wa = w2.translate(c.scale(k as i32 - 1));
        match splice(
            system,
            &current.trace,
            trace,
            &wa,
            c.scale(-(k as i32)),
            opts,
        ) {
            Ok(next) => current = next,
            Err(e) => {
                if matches!(reps, Repetitions::Count(_)) {
                    return Err(e);
                }
                let (t, a) =
                    continue_until_blocked(system, trace, w1, c.scale(k as i32), current, opts)?;
                return Ok(PumpOutcome {
                    trace: t,
                    assembly: a,
                    iterations: k - 1,
                    blocked: true,
                });
            }
        }
    }
    Ok(PumpOutcome {
        trace: current.trace,
        assembly: current.assembly,
        iterations: limit,
        blocked: false,
    })
}

fn continue_until_blocked(
    system: &TileSystem,
    trace: &AssemblyTrace,
    w1: &Window,
    shift: Point,
    current: Spliced,
    opts: SpliceOptions,
) -> Result<(AssemblyTrace, Assembly), SpliceError> {
    let seed_inside = w1.seed_side(&system.seed)?;
    let vsys = validation_system(system, opts.validation);
    let Spliced {
        trace: mut t,
        assembly: mut a,
    } = current;
    for p in trace
        .placements
        .iter()
        .filter(|p| w1.inside(p.pos) != seed_inside)
    {
        let q = p.translate(shift);
        match a.get(q.pos) {
            Some(existing) if existing == q.tile => continue,
            Some(_) => break,
            None => {}
        }
        if attach_mut(&mut a, q, &vsys).is_err() {
            break;
        }
        t.push(q);
    }
    Ok((t, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::greedy_run;
    use crate::geometry::{Dim, Direction::*};
    use crate::model::{ModelVariant, TileId, TileSet, TileType};

    fn ribbon() -> TileSystem {
        let ts = TileSet::new(
            Dim::Two,
            vec![TileType::new("r").glue_on(W, "r", 1).glue_on(E, "r", 1)],
        );
        TileSystem::new(
            "ribbon",
            ts,
            Assembly::singleton(Dim::Two, Point::ORIGIN, TileId(0)),
            1,
            ModelVariant::ATAM,
        )
    }

    fn ribbon_trace(len: i32) -> AssemblyTrace {
        // Eastward only, so the trace is a single ribbon arm.
        AssemblyTrace::new(
            (1..=len)
                .map(|x| Placement::new(Point::xy(x, 0), TileId(0)))
                .collect(),
        )
    }

    fn far_box(k: i32) -> Window {
        Window::boxed(Dim::Two, Point::xy(k + 1, -1), Point::xy(1000, 1)).unwrap()
    }

    #[test]
    fn identity_splice_reproduces_trace() {
        let s = ribbon();
        let t = ribbon_trace(6);
        let out = splice(
            &s,
            &t,
            &t,
            &far_box(2),
            Point::ORIGIN,
            SpliceOptions::default(),
        )
        .unwrap();
        assert_eq!(out.assembly, run_trace(&s, &t).unwrap());
    }

    #[test]
    fn ribbon_extends_by_one_column() {
        let s = ribbon();
        let t = ribbon_trace(6);
        let c = Point::xy(1, 0);
        let out = splice(&s, &t, &t, &far_box(3), -c, SpliceOptions::default()).unwrap();
        assert_eq!(out.assembly, run_trace(&s, &ribbon_trace(7)).unwrap());
        let pumped = pump(
            &s,
            &t,
            &far_box(2),
            &far_box(2).translate(c),
            c,
            Repetitions::Count(3),
            SpliceOptions::default(),
        )
        .unwrap();
        assert_eq!(pumped.assembly, run_trace(&s, &ribbon_trace(9)).unwrap());
        let zero = pump(
            &s,
            &t,
            &far_box(2),
            &far_box(2).translate(c),
            c,
            Repetitions::Count(0),
            SpliceOptions::default(),
        )
        .unwrap();
        assert_eq!(zero.trace, t);
    }

    #[test]
    fn unequal_movies_are_rejected() {
        let s = ribbon();
        let err = splice(
            &s,
            &ribbon_trace(6),
            &ribbon_trace(1),
            &far_box(2),
            Point::xy(-1, 0),
            SpliceOptions::default(),
        );
        assert_eq!(err.unwrap_err(), SpliceError::MovieMismatch);
    }

    #[test]
    fn matching_pair_on_ribbon() {
        let s = ribbon();
        let t = greedy_run(&s, 0);
        let template = Window::boxed(Dim::Two, Point::xy(1, 0), Point::xy(1, 0)).unwrap();
        let ts: Vec<Point> = (0..4).map(|x| Point::xy(x, 0)).collect();
        assert_eq!(
            find_matching_window_pair(&s, &t, &template, &ts).unwrap(),
            None
        );
        let t = ribbon_trace(8);
        let (w1, w2, c) = find_matching_window_pair(&s, &t, &template, &ts)
            .unwrap()
            .unwrap();
        assert_eq!(c, Point::xy(1, 0));
        assert_eq!(w2, w1.translate(c));
    }
}
