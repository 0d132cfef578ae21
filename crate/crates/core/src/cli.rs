//! The `nanoword` command line: argument parsing and the subcommands.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::classify::{classify, ClassifyOptions, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::homotopy::{search, SearchConfig, SearchStats, Verdict};
use crate::linear::BetaSet;
use crate::pairing::genus_lower_bound;
use crate::report::{render_nanoword, report, Contractibility, Invariants};
use crate::setting::Setting;
use crate::word::{EtaleWord, Nanoword};
use crate::AlphabetSpec;

#[derive(Parser, Debug)]
#[command(name = "nanoword", version, about = "Homotopy invariants and a bounded homotopy search for nanowords")]
pub struct Cli {
    /// Alphabet file (`letter`, `tau`, `fixed`, `triple`, `S diagonal` lines).
    #[arg(long, global = true)]
    pub alphabet: Option<PathBuf>,
    /// Built-in alphabet when no file is given: `curves` (default) or `knots`.
    #[arg(long, global = true)]
    pub preset: Option<String>,
    /// Letters of α₊, one per τ-orbit.
    #[arg(long = "alpha-plus", global = true)]
    pub alpha_plus: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit with status 2 when a bound runs out before a verdict.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct WordArgs {
    /// A word over α; desingularized before use.
    #[arg(long = "word")]
    pub words: Vec<String>,
    /// A nanoword literal `A:a B:b :: A B A B`.
    #[arg(long = "nanoword")]
    pub nanowords: Vec<String>,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    /// Longest word the search may visit; defaults to the longest input plus 4.
    #[arg(long = "max-len")]
    pub max_len: Option<usize>,
    #[arg(long = "max-states", default_value_t = SearchConfig::DEFAULT_MAX_STATES)]
    pub max_states: usize,
    /// Also allow the circular shift (non-pointed words).
    #[arg(long)]
    pub shift: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Every invariant of one word and a contractibility verdict.
    Report {
        #[command(flatten)]
        input: WordArgs,
        /// τ-stable letter sets for tricolorings; all of them by default.
        #[arg(long)]
        beta: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Decide whether two words are homotopic, within bounds.
    Equiv {
        #[command(flatten)]
        input: WordArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Classify all words of a length up to homotopy.
    Classify {
        #[arg(long)]
        length: usize,
        /// Keep only rearrangements of this word.
        #[arg(long)]
        content: Option<String>,
        #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
        cap: usize,
        /// Search bound above the longer word of each pair.
        #[arg(long, default_value_t = 4)]
        extra: usize,
        #[arg(long = "max-states", default_value_t = SearchConfig::DEFAULT_MAX_STATES)]
        max_states: usize,
    },
    /// Genus lower bound for a map `f: α → α₀`.
    Genus {
        #[command(flatten)]
        input: WordArgs,
        /// `x=a,y=b,...`: where each letter goes; `a`, `b` are the letters of α₀.
        #[arg(long)]
        map: Option<String>,
    },
    /// Print the desingularization of a word.
    Desing {
        #[command(flatten)]
        input: WordArgs,
    },
    /// Lower bound on the length norm from the primitive pairing.
    NormBound {
        #[command(flatten)]
        input: WordArgs,
    },
}

/// Output and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn load_setting(cli: &Cli) -> Result<Setting> {
    let spec = match (&cli.alphabet, cli.preset.as_deref()) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
            text.parse::<AlphabetSpec>()?
        }
        (None, None | Some("curves")) => AlphabetSpec::curves(),
        (None, Some("knots")) => AlphabetSpec::knots(),
        (None, Some(other)) => return Err(Error::Precondition(format!("unknown preset `{other}`"))),
    };
    match &cli.alpha_plus {
        None => Ok(Setting::new(spec)),
        Some(text) => {
            let names = letter_list(&spec, text)?;
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            Setting::with_alpha_plus(spec, &refs)
        }
    }
}

/// Letters separated by commas or spaces; single-character names may run together.
fn letter_list(spec: &AlphabetSpec, text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        if spec.index(tok).is_some() {
            out.push(tok.to_string());
        } else {
            let w = EtaleWord::plain(tok, spec)?;
            out.extend(w.word().iter().map(|&l| w.letters()[l].name.clone()));
        }
    }
    Ok(out)
}

/// `(label, nanoword)` for every input, words first.
fn inputs(s: &Setting, w: &WordArgs) -> Result<Vec<(String, Nanoword)>> {
    let mut out = Vec::new();
    for text in &w.words {
        let n = EtaleWord::plain(text, &s.spec)?.desingularize();
        out.push((if text.is_empty() { "(empty)".into() } else { text.clone() }, n));
    }
    for text in &w.nanowords {
        out.push((text.clone(), Nanoword::parse(text, &s.spec)?));
    }
    Ok(out)
}

fn one_input(s: &Setting, w: &WordArgs) -> Result<Nanoword> {
    let mut v = inputs(s, w)?;
    if v.len() != 1 {
        return Err(Error::Precondition("give exactly one --word or --nanoword".into()));
    }
    Ok(v.pop().unwrap().1)
}

fn config(args: &SearchArgs, lens: &[usize]) -> Result<SearchConfig> {
    let longest = lens.iter().copied().max().unwrap_or(0);
    let max_len = args.max_len.unwrap_or(longest + 4);
    if max_len < longest {
        return Err(Error::Precondition(format!("--max-len {max_len} is shorter than the input ({longest})")));
    }
    Ok(SearchConfig { max_len, max_states: args.max_states, shift: args.shift, derived: true })
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

#[derive(Serialize)]
struct EquivOutput {
    verdict: &'static str,
    /// Invariants that differ; any one of them proves the words are not homotopic.
    differing_invariants: Vec<&'static str>,
    witness: Option<Vec<String>>,
    stats: Option<SearchStats>,
}

#[derive(Serialize)]
struct Count {
    value: usize,
}

#[derive(Serialize)]
struct Desing {
    nanoword: String,
    canonical: String,
}

fn parse_map(s: &Setting, text: Option<&str>) -> Result<Vec<usize>> {
    let Some(text) = text else {
        // identity onto α₀ needs α = α₀
        return (0..s.spec.len())
            .map(|a| match s.spec.name(a) {
                "a" => Ok(0),
                "b" => Ok(1),
                other => Err(Error::Precondition(format!("no default image for `{other}`; pass --map"))),
            })
            .collect();
    };
    let mut f = vec![usize::MAX; s.spec.len()];
    for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (x, y) = item.split_once('=').ok_or_else(|| Error::Precondition(format!("bad map entry `{item}`")))?;
        let a = s.spec.index(x.trim()).ok_or_else(|| Error::UndeclaredLetter(x.trim().into()))?;
        f[a] = match y.trim() {
            "a" => 0,
            "b" => 1,
            other => return Err(Error::Precondition(format!("`{other}` is not a letter of α₀"))),
        };
    }
    if let Some(a) = f.iter().position(|&v| v == usize::MAX) {
        return Err(Error::Precondition(format!("map misses `{}`", s.spec.name(a))));
    }
    Ok(f)
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let s = load_setting(cli)?;
    let ok = |stdout: String| Outcome { code: 0, stdout };
    match &cli.command {
        Command::Report { input, beta, search: sa } => {
            let n = one_input(&s, input)?;
            let betas = if beta.is_empty() {
                BetaSet::enumerate(&s.spec)
            } else {
                beta.iter().map(|b| BetaSet::parse(&s.spec, b)).collect::<Result<_>>()?
            };
            let cfg = config(sa, &[n.len()])?;
            let (r, _) = report(&s, &n, &betas, &cfg);
            let unknown = matches!(r.contractibility, Contractibility::Unknown { .. });
            let text = if cli.json { json(&r) } else { r.render_text() };
            Ok(Outcome { code: if unknown && cli.strict { 2 } else { 0 }, stdout: text })
        }
        Command::Equiv { input, search: sa } => {
            let v = inputs(&s, input)?;
            if v.len() != 2 {
                return Err(Error::Precondition("give exactly two words (--word / --nanoword)".into()));
            }
            let (a, b) = (&v[0].1, &v[1].1);
            let cfg = config(sa, &[a.len(), b.len()])?;
            let betas = BetaSet::enumerate(&s.spec);
            let (ia, ib) = (Invariants::compute(&s, a, &betas), Invariants::compute(&s, b, &betas));
            let differing = ia.differing(&ib);
            // invariants certify nothing once the circular shift is allowed
            let out = if !differing.is_empty() && !cfg.shift {
                EquivOutput { verdict: "NOT_HOMOTOPIC", differing_invariants: differing, witness: None, stats: None }
            } else {
                let o = search(a, b, &s.spec, &cfg);
                let witness = o.witness.as_ref().map(|w| w.render(&s.spec).lines().map(String::from).collect());
                let verdict = if o.verdict == Verdict::Equivalent { "EQUIVALENT" } else { "UNKNOWN" };
                EquivOutput { verdict, differing_invariants: differing, witness, stats: Some(o.stats) }
            };
            let code = if out.verdict == "UNKNOWN" && cli.strict { 2 } else { 0 };
            let text = if cli.json {
                json(&out)
            } else {
                let mut t = format!("{}\n", out.verdict.replace('_', "-"));
                if !out.differing_invariants.is_empty() {
                    t.push_str(&format!("differing invariants: {}\n", out.differing_invariants.join(", ")));
                }
                if let Some(w) = &out.witness {
                    t.push_str(&format!("witness ({} steps):\n", w.iter().filter(|l| !l.starts_with(' ')).count()));
                    for l in w {
                        t.push_str(&format!("  {l}\n"));
                    }
                }
                if let Some(st) = &out.stats {
                    t.push_str(&format!("states {}, frontier peak {}, max_len {}\n", st.states, st.frontier_peak, st.max_len));
                }
                t
            };
            Ok(Outcome { code, stdout: text })
        }
        Command::Classify { length, content, cap, extra, max_states } => {
            let opts = ClassifyOptions { cap: *cap, extra: *extra, max_states: *max_states, content: content.clone() };
            let c = classify(&s, *length, &opts)?;
            let code = if !c.unknown.is_empty() && cli.strict { 2 } else { 0 };
            Ok(Outcome { code, stdout: if cli.json { json(&c) } else { c.render_text() } })
        }
        Command::Genus { input, map } => {
            let n = one_input(&s, input)?;
            let f = parse_map(&s, map.as_deref())?;
            let g = genus_lower_bound(&s, &n, &f)?;
            Ok(ok(if cli.json { json(&Count { value: g }) } else { format!("{g}\n") }))
        }
        Command::Desing { input } => {
            let n = one_input(&s, input)?;
            let d = Desing { nanoword: render_nanoword(&s, &n), canonical: render_nanoword(&s, &n.canonical_form().to_nanoword()) };
            Ok(ok(if cli.json { json(&d) } else { format!("{}\n", d.nanoword) }))
        }
        Command::NormBound { input } => {
            let n = one_input(&s, input)?;
            let b = crate::pairing::norm_lower_bound(&s, &n)?;
            Ok(ok(if cli.json { json(&Count { value: b }) } else { format!("{b}\n") }))
        }
    }
}

/// Runs one invocation. Errors print to the returned stdout with exit status 1.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return Outcome { code, stdout: e.to_string() };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome { code: 1, stdout: format!("error: {e}\n") },
    }
}
