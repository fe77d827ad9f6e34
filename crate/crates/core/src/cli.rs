//! Command-line front end. [`run`] never touches the process streams, so it
//! can be driven directly from tests.
//!
//! Exit status: 0 for success or a positive decision, 3 for a negative
//! decision (not equivalent, obstruction not satisfied, ...), 2 for any
//! parse or validation error.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ColorChoice, Parser, Subcommand};

use crate::action::{solid_torus_eval, ExtendedActionData, SolidTorusPoint};
use crate::files::load_action_file;
use crate::obstruction::{
    decompose, obstruction_divisor, orbit_constancy_check, rewrite_presentation, HFunction,
};
use crate::orbifold::OrbifoldData;
use crate::parse::{self, ParseError};
use crate::rational::{Fraction, Int, RationalAngle};
use crate::seifert::{GluingPair, SeifertPresentation};
use crate::structure::structure_report;
use crate::torus::TorusAutomorphism;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "seifert",
    version,
    about = "Seifert fibered presentations and finite fiber-preserving actions"
)]
struct Cli {
    /// Disable colored help and error output.
    #[arg(long, global = true)]
    no_color: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check coprimality and positivity of every Seifert pair.
    Validate { presentation: String },
    /// Print the normal form (g, o1 | (q1,p1), ..., (1,b)).
    Normalize { presentation: String },
    /// Decide fiber-preserving equivalence of two presentations.
    Equiv { first: String, second: String },
    /// Euler number -(b + sum p/q).
    Euler { presentation: String },
    /// Gluing exponents (x, y) and induced fibration of a pair "(q,p)".
    GluePair { pair: String },
    /// Orbifold Euler characteristic of "genus:g cone:(...) corner:(...)".
    OrbifoldChi {
        orbifold: String,
        /// Also print the geometry type given by the sign.
        #[arg(long)]
        geometry: bool,
    },
    /// Possible orbit sizes for a base action of the given order.
    OrbitNumbers {
        #[arg(long)]
        order: u64,
        orbifold: String,
    },
    /// Divisibility test N/lcm(n_i, 2m_j) | b, with a witness.
    CheckObstruction {
        /// Obstruction class.
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "pres",
            required_unless_present = "pres"
        )]
        b: Option<String>,
        /// Take b from this presentation instead.
        #[arg(long)]
        pres: Option<String>,
        #[arg(long)]
        order: u64,
        orbifold: String,
    },
    /// Write b as an integer combination of orbit numbers.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Comma-separated positive orbit numbers.
        #[arg(long)]
        orbits: String,
    },
    /// Rewrite a presentation by an h-function summing to b.
    Rewrite {
        presentation: String,
        /// Comma-separated values: one per critical pair, then one per regular slot.
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value_t = 0)]
        regular_slots: usize,
        /// Orbit classes of slots (1-based), e.g. "1,2;3"; h must be constant on each.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Check every compatibility condition of an action file.
    VerifyAction { action: PathBuf },
    /// Action of an element on a boundary torus of the trivially fibered piece.
    BoundaryAction {
        action: PathBuf,
        #[arg(long)]
        element: usize,
        /// 1-based boundary component.
        #[arg(long)]
        component: usize,
    },
    /// Induced action on the boundary of a filling solid torus.
    FillingAction {
        action: PathBuf,
        #[arg(long)]
        element: usize,
        /// 1-based boundary component.
        #[arg(long)]
        component: usize,
        /// Evaluate the coned action at "u,r,v" (angles u, v; radius r in [0,1]).
        #[arg(long)]
        point: Option<String>,
    },
    /// Orbit sizes of boundary components; optionally check the obstruction condition.
    Orbits {
        action: PathBuf,
        /// Presentation whose obstruction class should be decomposed.
        #[arg(long)]
        pres: Option<String>,
        /// Extra orbit sizes of regular fibers, comma-separated.
        #[arg(long, requires = "pres")]
        regular_orbits: Option<String>,
    },
    /// Fiber-orientation-preserving subgroup, rotation order and splitting.
    Structure { action: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct InputError(String);

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<i32, InputError>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let no_color = args.iter().any(|a| a == "--no-color");
    let mut command = <Cli as clap::CommandFactory>::command();
    if no_color {
        command = command.color(ColorChoice::Never);
    }
    let cli = match command
        .try_get_matches_from(args)
        .and_then(|m| <Cli as clap::FromArgMatches>::from_arg_matches(&m))
    {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.command, &mut out) {
        Ok(status) => Outcome {
            status,
            stdout: out,
            stderr: String::new(),
        },
        Err(InputError(msg)) => Outcome {
            status: EXIT_INPUT,
            stdout: out,
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn presentation(s: &str) -> Result<SeifertPresentation, InputError> {
    Ok(s.parse::<SeifertPresentation>()?)
}

fn int_list(s: &str) -> Result<Vec<Int>, ParseError> {
    parse::list(&parse::strip_ws(s), s, parse::int)
}

fn orbit_list(s: &str) -> Result<Vec<u64>, InputError> {
    let v: Vec<u64> = parse::list(&parse::strip_ws(s), s, parse::unsigned)?;
    if v.contains(&0) {
        return Err(InputError("orbit numbers must be positive".into()));
    }
    Ok(v)
}

fn verified_action(path: &std::path::Path) -> Result<ExtendedActionData, InputError> {
    let data = load_action_file(path)?;
    if let Err(violations) = data.verify() {
        return Err(InputError(format!(
            "action data fails verification ({} violations; run verify-action)",
            violations.len()
        )));
    }
    Ok(data)
}

fn element_component(
    data: &ExtendedActionData,
    element: usize,
    component: usize,
) -> Result<(usize, usize), InputError> {
    if element >= data.group().order() {
        return Err(InputError(format!("element {element} is not in the group")));
    }
    if component == 0 || component > data.n_boundary() {
        return Err(InputError(format!(
            "component must be between 1 and {}",
            data.n_boundary()
        )));
    }
    Ok((element, component - 1))
}

fn dispatch(command: Command, out: &mut String) -> CmdResult {
    match command {
        Command::Validate { presentation: p } => match presentation(&p)?.validate() {
            Ok(()) => {
                writeln!(out, "ok").unwrap();
                Ok(EXIT_OK)
            }
            Err(report) => {
                for v in &report.0 {
                    writeln!(out, "{v}").unwrap();
                }
                Ok(EXIT_NEGATIVE)
            }
        },
        Command::Normalize { presentation: p } => {
            writeln!(out, "{}", presentation(&p)?.normalize()?).unwrap();
            Ok(EXIT_OK)
        }
        Command::Equiv { first, second } => {
            if presentation(&first)?.equivalent(&presentation(&second)?)? {
                writeln!(out, "equivalent").unwrap();
                Ok(EXIT_OK)
            } else {
                writeln!(out, "not equivalent").unwrap();
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Euler { presentation: p } => {
            writeln!(out, "{}", presentation(&p)?.euler_number()?).unwrap();
            Ok(EXIT_OK)
        }
        Command::GluePair { pair } => {
            let s = parse::strip_ws(&pair);
            let pairs = parse::int_pairs(&s, &pair)?;
            let [(q, p)] = <[_; 1]>::try_from(pairs)
                .map_err(|_| InputError("expected exactly one pair (q,p)".into()))?;
            let gp = GluingPair::for_pair(&crate::seifert::SeifertPair::new(q, p))?;
            let (a, b) = gp.induced_fibration();
            writeln!(out, "x: {}", gp.x).unwrap();
            writeln!(out, "y: {}", gp.y).unwrap();
            writeln!(out, "gluing: {}", TorusAutomorphism::gluing(&gp)).unwrap();
            writeln!(out, "induced_fibration: ({a},{b})").unwrap();
            Ok(EXIT_OK)
        }
        Command::OrbifoldChi { orbifold, geometry } => {
            let o: OrbifoldData = orbifold.parse()?;
            writeln!(out, "{}", o.euler_characteristic()?).unwrap();
            if geometry {
                writeln!(out, "{}", o.geometry_sign()?).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::OrbitNumbers { order, orbifold } => {
            let o: OrbifoldData = orbifold.parse()?;
            let set = o.possible_orbit_numbers(order)?;
            writeln!(out, "{}", join(&set)).unwrap();
            Ok(EXIT_OK)
        }
        Command::CheckObstruction {
            b,
            pres,
            order,
            orbifold,
        } => {
            let b = match (b, pres) {
                (Some(b), _) => parse::int(b.trim(), &b)?,
                (None, Some(p)) => presentation(&p)?.normalize()?.b().clone(),
                (None, None) => unreachable!("clap requires one of --b/--pres"),
            };
            let o: OrbifoldData = orbifold.parse()?;
            let divisor = obstruction_divisor(order, &o)?;
            let orbits: Vec<u64> = o.possible_orbit_numbers(order)?.into_iter().collect();
            writeln!(out, "divisor: {divisor}").unwrap();
            writeln!(out, "orbit_numbers: {}", join(&orbits)).unwrap();
            let divisible = num_integer::Integer::is_multiple_of(&b, &divisor);
            let witness = decompose(&b, &orbits);
            // the two deciders agree
            assert_eq!(divisible, witness.is_some());
            match witness {
                Some(w) => {
                    writeln!(out, "satisfied: {w}").unwrap();
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not satisfied").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Decompose { b, orbits } => {
            let b = parse::int(b.trim(), &b)?;
            match decompose(&b, &orbit_list(&orbits)?) {
                Some(w) => {
                    writeln!(out, "{w}").unwrap();
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "impossible").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Rewrite {
            presentation: p,
            h,
            regular_slots,
            partition,
        } => {
            let original = presentation(&p)?;
            let normal = original.normalize()?;
            let h = HFunction(int_list(&h)?);
            let rewritten = rewrite_presentation(&normal, &h, regular_slots)?;
            assert!(rewritten.equivalent(&original)?);
            writeln!(out, "{rewritten}").unwrap();
            if let Some(spec) = partition {
                let classes = parse_partition(&spec)?;
                if !orbit_constancy_check(&h, &classes)? {
                    writeln!(out, "h is not constant on the orbit classes").unwrap();
                    return Ok(EXIT_NEGATIVE);
                }
            }
            Ok(EXIT_OK)
        }
        Command::VerifyAction { action } => {
            let data = load_action_file(&action)?;
            match data.verify() {
                Ok(()) => {
                    writeln!(out, "ok").unwrap();
                    Ok(EXIT_OK)
                }
                Err(violations) => {
                    for v in &violations {
                        writeln!(out, "{v}").unwrap();
                    }
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::BoundaryAction {
            action,
            element,
            component,
        } => {
            let data = verified_action(&action)?;
            let (g, i) = element_component(&data, element, component)?;
            let (to, map) = data.boundary_action(g, i);
            writeln!(out, "target: {}", to + 1).unwrap();
            writeln!(out, "map: {map}").unwrap();
            Ok(EXIT_OK)
        }
        Command::FillingAction {
            action,
            element,
            component,
            point,
        } => {
            let data = verified_action(&action)?;
            let (g, i) = element_component(&data, element, component)?;
            let (to, map) = data.induced_filling_action(g, i);
            writeln!(out, "target: {}", to + 1).unwrap();
            writeln!(out, "map: {map}").unwrap();
            if let Some(pt) = point {
                let parts = parse::list(&parse::strip_ws(&pt), &pt, parse::fraction)?;
                let [u, r, v] = <[Fraction; 3]>::try_from(parts)
                    .map_err(|_| InputError("point must be u,r,v".into()))?;
                let p = SolidTorusPoint::new(RationalAngle::new(u), r, RationalAngle::new(v))?;
                let image = solid_torus_eval(&map, &p)?;
                writeln!(out, "point: ({}, {}, {})", image.u(), image.r(), image.v()).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Orbits {
            action,
            pres,
            regular_orbits,
        } => {
            let data = verified_action(&action)?;
            for (i, n) in data.boundary_orbit_numbers().iter().enumerate() {
                writeln!(out, "{}: {n}", i + 1).unwrap();
            }
            let Some(p) = pres else {
                return Ok(EXIT_OK);
            };
            let normal = presentation(&p)?.normalize()?;
            let extra = match regular_orbits {
                Some(s) => orbit_list(&s)?,
                None => Vec::new(),
            };
            match data.obstruction_check(&normal, &extra)? {
                Some(w) => {
                    writeln!(out, "satisfied: {w}").unwrap();
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not satisfied").unwrap();
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Structure { action } => {
            let data = verified_action(&action)?;
            write!(out, "{}", structure_report(&data)).unwrap();
            let kernel: BTreeSet<usize> = data.kernel_on_boundary().into_iter().collect();
            writeln!(out, "boundary_kernel: {{{}}}", join(&kernel)).unwrap();
            Ok(EXIT_OK)
        }
    }
}

fn join<'a, T: ToString + 'a>(items: impl IntoIterator<Item = &'a T>) -> String {
    items
        .into_iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// `"1,2;3"` → `[[0, 1], [2]]`.
fn parse_partition(spec: &str) -> Result<Vec<Vec<usize>>, InputError> {
    parse::strip_ws(spec)
        .split(';')
        .map(|class| {
            let slots: Vec<usize> = parse::list(class, spec, parse::unsigned)?;
            slots
                .into_iter()
                .map(|s| {
                    s.checked_sub(1)
                        .ok_or_else(|| InputError("partition slots are 1-based".into()))
                })
                .collect()
        })
        .collect()
}
