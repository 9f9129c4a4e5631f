//! Realization selection and parsing of generator names, subsets and words.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use atomic_leibniz::coxeter::{CoxeterSystem, Subset};
use atomic_leibniz::realization::{Realization, RealizationConfig};
use atomic_leibniz::poly::Polynomial;
use atomic_leibniz::Coeff;
use clap::ValueEnum;

/// A problem with the command line or its inputs. Maps to exit status 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

pub fn config_err(msg: impl Into<String>) -> anyhow::Error {
    ConfigError(msg.into()).into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoxeterType {
    A,
    B,
    C,
    D,
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    /// Integers
    Z,
    /// Rationals
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// `perm`, `root`, `affine`, or a path to a JSON realization config.
    pub realization: String,
    pub coxeter_type: CoxeterType,
    pub n: usize,
    pub degmax: u32,
    pub cap: usize,
    pub format: Format,
    pub ring: Ring,
    pub seed: u64,
}

impl RunConfig {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.cap < 1 {
            return Err(config_err("--cap must be at least 1"));
        }
        Ok(())
    }

    pub fn build_realization<C: Coeff>(&self) -> anyhow::Result<Arc<Realization<C>>> {
        let built = match self.realization.as_str() {
            "perm" | "permutation" => {
                if self.coxeter_type != CoxeterType::A {
                    return Err(config_err("the permutation realization needs --type A"));
                }
                Realization::permutation_with_cap(self.n, self.cap)
            }
            "affine" => {
                if self.coxeter_type != CoxeterType::A {
                    return Err(config_err("the affine realization needs --type A"));
                }
                Realization::<C>::affine_permutation(self.n)
                    .and_then(|r| Realization::from_config_with_cap(&r.config(), self.cap))
            }
            "root" => {
                let sys = match self.coxeter_type {
                    CoxeterType::A => CoxeterSystem::symmetric(self.n),
                    CoxeterType::B | CoxeterType::C => CoxeterSystem::type_bc(self.n),
                    CoxeterType::D => CoxeterSystem::type_d(self.n),
                    CoxeterType::I => CoxeterSystem::dihedral(Some(self.n as u32)),
                }
                .map_err(|e| config_err(e.to_string()))?;
                Realization::root_realization(Arc::new(sys.with_cap(self.cap)))
            }
            path => {
                let text = std::fs::read_to_string(Path::new(path))
                    .map_err(|e| config_err(format!("cannot read realization {path:?}: {e}")))?;
                let cfg: RealizationConfig =
                    serde_json::from_str(&text).map_err(|e| config_err(format!("bad realization config {path:?}: {e}")))?;
                Realization::from_config_with_cap(&cfg, self.cap)
                    .and_then(|r| r.check_braid_relations().map(|()| r))
            }
        };
        let r = built.map_err(|e| config_err(e.to_string()))?;
        r.check_pairings().map_err(|e| config_err(e.to_string()))?;
        Ok(Arc::new(r))
    }

    pub fn label(&self) -> String {
        let base = match self.realization.as_str() {
            "perm" | "permutation" => format!("permutation({})", self.n),
            "affine" => format!("affine_permutation({})", self.n),
            "root" => format!("root({:?}{})", self.coxeter_type, self.n),
            path => format!("file:{path}"),
        };
        match self.ring {
            Ring::Z => base,
            Ring::Q => format!("{base} over Q"),
        }
    }
}

const LETTERS: &str = "stuvwxyz";

/// A generator by name (`s2`), 1-based index (`2`) or letter alias
/// (`s`, `t`, `u`, … for the first, second, third, … generator).
pub fn parse_generator(sys: &CoxeterSystem, token: &str) -> anyhow::Result<usize> {
    if let Ok(i) = sys.generator_index(token) {
        return Ok(i);
    }
    if let Ok(k) = token.parse::<usize>() {
        if (1..=sys.rank()).contains(&k) {
            return Ok(k - 1);
        }
    }
    let mut chars = token.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        if let Some(i) = LETTERS.find(c) {
            if i < sys.rank() {
                return Ok(i);
            }
        }
    }
    Err(config_err(format!("unknown generator {token:?}")))
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty())
}

/// Generators in a token; a run of letter aliases such as `sut` expands to
/// one generator per letter.
fn expand(sys: &CoxeterSystem, token: &str) -> anyhow::Result<Vec<usize>> {
    if let Ok(i) = parse_generator(sys, token) {
        return Ok(vec![i]);
    }
    if token.chars().all(|c| LETTERS.contains(c)) {
        return token.chars().map(|c| parse_generator(sys, &c.to_string())).collect();
    }
    Err(config_err(format!("unknown generator {token:?}")))
}

pub fn parse_subset(sys: &CoxeterSystem, text: &str) -> anyhow::Result<Subset> {
    if matches!(text.trim(), "" | "-" | "e" | "∅") {
        return Ok(Subset::EMPTY);
    }
    let mut out = Subset::EMPTY;
    for t in tokens(text) {
        for i in expand(sys, t)? {
            out = out.insert(i);
        }
    }
    Ok(out)
}

pub fn parse_word(sys: &CoxeterSystem, text: &str) -> anyhow::Result<Vec<usize>> {
    if matches!(text.trim(), "" | "e") {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for t in tokens(text) {
        out.extend(expand(sys, t)?);
    }
    Ok(out)
}

pub fn parse_poly<C: Coeff>(r: &Realization<C>, text: &str) -> anyhow::Result<Polynomial<C>> {
    r.parse(text).map_err(|e| config_err(format!("cannot parse polynomial {text:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_aliases() {
        let sys = CoxeterSystem::symmetric(4).unwrap();
        assert_eq!(parse_generator(&sys, "s2").unwrap(), 1);
        assert_eq!(parse_generator(&sys, "3").unwrap(), 2);
        assert_eq!(parse_generator(&sys, "u").unwrap(), 2);
        assert!(parse_generator(&sys, "v").is_err());
        assert_eq!(parse_subset(&sys, "s,u").unwrap(), Subset::from_indices([0, 2]));
        assert_eq!(parse_subset(&sys, "-").unwrap(), Subset::EMPTY);
        assert_eq!(parse_word(&sys, "sut").unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_word(&sys, "s1 s3 s2").unwrap(), vec![0, 2, 1]);
        assert_eq!(parse_word(&sys, "e").unwrap(), Vec::<usize>::new());
    }
}
