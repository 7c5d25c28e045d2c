use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use schurtrails::identities::{
    bijection_audit, dodgson_specialisation, explore_orbit, kleber_terms, verify_ciucu, verify_dodgson,
    verify_general, verify_kirillov, verify_kleber, verify_pluecker, IdentityReport, PlueckerMode,
};
use schurtrails::partitions::{parse_int_list, Partition, SkewShape};
use schurtrails::{Error, Result};

pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl From<IdentityReport> for Outcome {
    fn from(r: IdentityReport) -> Self {
        let mut text = format!(
            "{} {}: {} (lhs {} terms, rhs {} terms, {} ms)",
            r.identity,
            r.params,
            if r.equal { "equal" } else { "NOT equal" },
            r.lhs_terms(),
            r.rhs_terms(),
            r.elapsed_ms
        );
        if let Some(w) = &r.witness {
            text.push_str(&format!("\n  first difference at {}: {} vs {}", w.monomial, w.lhs, w.rhs));
        }
        Outcome { json: r.to_json(), text, ok: r.equal }
    }
}

#[derive(Clone, Debug)]
pub struct IntList(pub Vec<i64>);

fn int_list(s: &str) -> std::result::Result<IntList, String> {
    parse_int_list(s).map(IntList).map_err(|e| e.to_string())
}

/// `key=a..b`, inclusive at both ends.
#[derive(Clone, Debug)]
pub struct Sweep {
    key: String,
    lo: i64,
    hi: i64,
}

fn sweep(s: &str) -> std::result::Result<Sweep, String> {
    let (key, range) = s.split_once('=').ok_or_else(|| format!("expected key=a..b, got {s:?}"))?;
    let (a, b) = range.split_once("..").ok_or_else(|| format!("expected a..b, got {range:?}"))?;
    let num = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = (num(a)?, num(b)?);
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(Sweep { key: key.trim().to_string(), lo, hi })
}

#[derive(Args, Clone, Debug, Default)]
pub struct Common {
    /// Number of variables N.
    #[arg(long)]
    vars: Option<u32>,
    /// Run over a range of one parameter, e.g. `vars=1..4`; repeatable.
    #[arg(long, value_parser = sweep)]
    sweep: Vec<Sweep>,
}

fn to_u32(key: &str, v: i64) -> std::result::Result<u32, String> {
    u32::try_from(v).map_err(|_| format!("{key} must be non-negative, got {v}"))
}

fn to_usize(key: &str, v: i64) -> std::result::Result<usize, String> {
    usize::try_from(v).map_err(|_| format!("{key} must be non-negative, got {v}"))
}

fn required<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone().ok_or_else(|| Error::InvalidParameter(format!("missing --{flag}")))
}

pub trait Job: Clone + Send + Sync + Sized {
    fn common(&self) -> &Common;
    fn common_mut(&mut self) -> &mut Common;

    fn set(&mut self, key: &str, _v: i64) -> std::result::Result<(), String> {
        Err(format!("cannot sweep {key:?} here"))
    }

    fn run(&self) -> Result<Outcome>;

    /// One job per point of the sweep grid, in lexicographic order.
    fn sweep_points(&self) -> std::result::Result<Vec<Self>, String> {
        let mut points = vec![self.clone()];
        for s in &self.common().sweep {
            let mut next = Vec::new();
            for p in &points {
                for v in s.lo..=s.hi {
                    let mut q = p.clone();
                    if s.key == "vars" {
                        q.common_mut().vars = Some(to_u32("vars", v)?);
                    } else {
                        q.set(&s.key, v)?;
                    }
                    next.push(q);
                }
            }
            points = next;
        }
        Ok(points)
    }
}

macro_rules! common_access {
    () => {
        fn common(&self) -> &Common {
            &self.common
        }
        fn common_mut(&mut self) -> &mut Common {
            &mut self.common
        }
    };
}

#[derive(Args, Clone, Debug)]
pub struct GeneralArgs {
    /// Weakly decreasing parts `λ_1,..,λ_{r+1}`.
    #[arg(long, value_parser = int_list)]
    lambda: IntList,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Debug)]
pub struct General {
    pub args: GeneralArgs,
    pub kirillov: bool,
}

impl Job for General {
    fn common(&self) -> &Common {
        &self.args.common
    }

    fn common_mut(&mut self) -> &mut Common {
        &mut self.args.common
    }

    fn run(&self) -> Result<Outcome> {
        let l = &self.args.lambda.0;
        let n = self.args.common.vars.unwrap_or(l.len().max(1) as u32);
        if !self.kirillov {
            return verify_general(l, n).map(Outcome::from);
        }
        let c = l.first().copied().unwrap_or(0);
        if l.len() < 2 || l.iter().any(|&p| p != c) || c < 0 {
            return Err(Error::InvalidParameter("the square identity takes a constant λ = (c, .., c) with r+1 >= 2 parts".into()));
        }
        verify_kirillov(c as usize, l.len() - 1, n).map(Outcome::from)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Formal,
    Schur,
}

#[derive(Args, Clone, Debug)]
pub struct DodgsonArgs {
    /// The matrix is (r+1)×(r+1).
    #[arg(long)]
    r: usize,
    /// `schur` specialises entries to complete homogeneous polynomials.
    #[arg(long, value_enum, default_value_t = Mode::Formal)]
    mode: Mode,
    #[command(flatten)]
    common: Common,
}

impl Job for DodgsonArgs {
    common_access!();

    fn set(&mut self, key: &str, v: i64) -> std::result::Result<(), String> {
        match key {
            "r" => self.r = to_usize(key, v)?,
            _ => return Err(format!("cannot sweep {key:?} here")),
        }
        Ok(())
    }

    fn run(&self) -> Result<Outcome> {
        match self.mode {
            Mode::Formal => verify_dodgson(self.r).map(Outcome::from),
            Mode::Schur => {
                let n = self.common.vars.unwrap_or(self.r as u32 + 1);
                dodgson_specialisation(self.r, n).map(Outcome::from)
            }
        }
    }
}

#[derive(Args, Clone, Debug)]
pub struct PlueckerArgs {
    /// Minors are n×n in a 2n×n matrix.
    #[arg(long)]
    n: usize,
    /// Increasing rows `r_1 < .. < r_k` to exchange; may be empty.
    #[arg(long, value_parser = int_list, default_value = "")]
    rlist: IntList,
    #[arg(long, value_enum, default_value_t = Mode::Formal)]
    mode: Mode,
    #[arg(long, value_parser = int_list)]
    lambda: Option<IntList>,
    #[arg(long, value_parser = int_list)]
    sigma: Option<IntList>,
    #[command(flatten)]
    common: Common,
}

impl Job for PlueckerArgs {
    common_access!();

    fn set(&mut self, key: &str, v: i64) -> std::result::Result<(), String> {
        match key {
            "n" => self.n = to_usize(key, v)?,
            _ => return Err(format!("cannot sweep {key:?} here")),
        }
        Ok(())
    }

    fn run(&self) -> Result<Outcome> {
        let rlist: Vec<usize> = self
            .rlist
            .0
            .iter()
            .map(|&r| usize::try_from(r).map_err(|_| Error::InvalidParameter(format!("row {r}"))))
            .collect::<Result<_>>()?;
        let mode = match self.mode {
            Mode::Formal => PlueckerMode::Formal,
            Mode::Schur => PlueckerMode::Schur {
                lambda: required(&self.lambda, "lambda")?.0,
                sigma: required(&self.sigma, "sigma")?.0,
                vars: self.common.vars.unwrap_or(self.n as u32),
            },
        };
        verify_pluecker(self.n, &rlist, &mode).map(Outcome::from)
    }
}

#[derive(Args, Clone, Debug)]
pub struct CiucuArgs {
    /// Increasing positive integers `t_1 < .. < t_2n`.
    #[arg(long = "set", value_parser = int_list)]
    set: IntList,
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    common: Common,
}

impl Job for CiucuArgs {
    common_access!();

    fn set(&mut self, key: &str, v: i64) -> std::result::Result<(), String> {
        match key {
            "k" => self.k = to_usize(key, v)?,
            _ => return Err(format!("cannot sweep {key:?} here")),
        }
        Ok(())
    }

    fn run(&self) -> Result<Outcome> {
        let n = self.common.vars.unwrap_or((self.set.0.len() / 2).max(1) as u32);
        verify_ciucu(&self.set.0, self.k, n).map(Outcome::from)
    }
}

#[derive(Args, Clone, Debug)]
pub struct KleberArgs {
    #[arg(long, value_parser = int_list)]
    lambda: IntList,
    /// Corner index, 1-based.
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    common: Common,
}

impl Job for KleberArgs {
    common_access!();

    fn set(&mut self, key: &str, v: i64) -> std::result::Result<(), String> {
        match key {
            "k" => self.k = to_usize(key, v)?,
            _ => return Err(format!("cannot sweep {key:?} here")),
        }
        Ok(())
    }

    fn run(&self) -> Result<Outcome> {
        let lam = Partition::from_signed(&self.lambda.0)?.trimmed();
        let n = match self.common.vars {
            Some(n) => n,
            None => {
                let (terms, _) = kleber_terms(&lam, self.k)?;
                terms.iter().flat_map(|t| [t.plus.len(), t.minus.len()]).chain([lam.len()]).max().unwrap_or(1).max(1)
                    as u32
            }
        };
        verify_kleber(&lam, self.k, n).map(Outcome::from)
    }
}

#[derive(Args, Clone, Debug)]
pub struct AuditArgs {
    #[arg(long, value_parser = int_list)]
    lambda: IntList,
    #[command(flatten)]
    common: Common,
}

impl Job for AuditArgs {
    common_access!();

    fn run(&self) -> Result<Outcome> {
        let n = self.common.vars.unwrap_or(self.lambda.0.len().max(1) as u32);
        let a = bijection_audit(&self.lambda.0, n)?;
        let text = format!(
            "audit {:?} N={}: {} ({} objects = {} A + {} B; gap {}, other {}; {} graphs, {} failing; {} ms)",
            a.lambda,
            a.n,
            if a.passed() { "passed" } else { "FAILED" },
            a.lhs_objects,
            a.type_a,
            a.type_b,
            a.gap_hits,
            a.other_hits,
            a.graphs_checked,
            a.graph_failures,
            a.elapsed_ms
        );
        let mut v = serde_json::to_value(&a).expect("report serialises");
        v["passed"] = json!(a.passed());
        Ok(Outcome { json: v, text, ok: a.passed() })
    }
}

#[derive(Args, Clone, Debug)]
pub struct OrbitArgs {
    /// Blue outer shape λ.
    #[arg(long, value_parser = int_list)]
    lambda: IntList,
    /// Blue inner shape μ.
    #[arg(long, value_parser = int_list, default_value = "")]
    inner: IntList,
    /// Green outer shape σ.
    #[arg(long, value_parser = int_list)]
    sigma: IntList,
    /// Green inner shape τ.
    #[arg(long, value_parser = int_list, default_value = "")]
    tau: IntList,
    /// Horizontal offset of the green family.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    offset: i64,
    /// 1-based indices of the terminal points to recolour from.
    #[arg(long, value_parser = int_list, default_value = "")]
    select: IntList,
    #[command(flatten)]
    common: Common,
}

fn skew(outer: &[i64], inner: &[i64]) -> Result<SkewShape> {
    SkewShape::new(Partition::from_signed(outer)?, Partition::from_signed(inner)?)
}

impl Job for OrbitArgs {
    common_access!();

    fn set(&mut self, key: &str, v: i64) -> std::result::Result<(), String> {
        match key {
            "offset" => self.offset = v,
            _ => return Err(format!("cannot sweep {key:?} here")),
        }
        Ok(())
    }

    fn run(&self) -> Result<Outcome> {
        let blue = skew(&self.lambda.0, &self.inner.0)?;
        let green = skew(&self.sigma.0, &self.tau.0)?;
        let n = self.common.vars.unwrap_or(blue.rows().max(green.rows()).max(1) as u32);
        let selected: Vec<usize> = self
            .select
            .0
            .iter()
            .map(|&i| usize::try_from(i).map_err(|_| Error::InvalidParameter(format!("index {i}"))))
            .collect::<Result<_>>()?;
        let r = explore_orbit(&blue, &green, self.offset, &selected, n)?;
        let text = format!(
            "orbit N={} selected {:?}: {} (|S0| = {}, |S1| = {}, |O0| = {}, |O1| = {}, {} ms)",
            r.n,
            r.selected,
            if r.passed() { "passed" } else { "FAILED" },
            r.s0.len(),
            r.s1.len(),
            r.o0_size,
            r.o1_size,
            r.elapsed_ms
        );
        Ok(Outcome { json: r.to_json(), text, ok: r.passed() })
    }
}
