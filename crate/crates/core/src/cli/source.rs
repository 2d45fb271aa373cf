//! Generator specs such as `path:6` or `corona:path:3:2`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{corona, gen_complete, gen_path, gen_star, random_tree, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Star(usize),
    Complete(usize),
    Corona(Box<GraphSpec>, usize),
    RandomTree { n: usize, seed: u64 },
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Path(n) => gen_path(*n),
            GraphSpec::Star(r) => gen_star(*r),
            GraphSpec::Complete(n) => gen_complete(*n),
            GraphSpec::Corona(base, r) => corona(&base.build()?, *r),
            GraphSpec::RandomTree { n, seed } => random_tree(*n, *seed),
        }
    }
}

fn number<T: FromStr>(field: &str, spec: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| Error::arg(format!("`{field}` is not a number in generator spec `{spec}`")))
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::arg(format!("unrecognized generator spec `{spec}`"));
        let (kind, rest) = spec.split_once(':').ok_or_else(bad)?;
        let fields: Vec<&str> = rest.split(':').collect();
        match (kind, fields.as_slice()) {
            ("path", [n]) => Ok(GraphSpec::Path(number(n, spec)?)),
            ("star", [r]) => Ok(GraphSpec::Star(number(r, spec)?)),
            ("complete", [n]) => Ok(GraphSpec::Complete(number(n, spec)?)),
            ("random-tree", [n, seed]) => Ok(GraphSpec::RandomTree {
                n: number(n, spec)?,
                seed: number(seed, spec)?,
            }),
            ("corona", [_, _, ..]) => {
                let (base, r) = rest.rsplit_once(':').ok_or_else(bad)?;
                Ok(GraphSpec::Corona(Box::new(base.parse()?), number(r, spec)?))
            }
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Star(r) => write!(f, "star:{r}"),
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::Corona(base, r) => write!(f, "corona:{base}:{r}"),
            GraphSpec::RandomTree { n, seed } => write!(f, "random-tree:{n}:{seed}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        for s in [
            "path:4",
            "star:3",
            "complete:5",
            "random-tree:9:7",
            "corona:path:2:1",
            "corona:corona:star:2:1:3",
        ] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(
            "corona:path:2:1".parse::<GraphSpec>().unwrap(),
            GraphSpec::Corona(Box::new(GraphSpec::Path(2)), 1)
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in [
            "",
            "path",
            "path:x",
            "path:1:2",
            "wheel:5",
            "corona:path:2",
            "random-tree:5",
            "corona:3",
        ] {
            assert!(s.parse::<GraphSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn builds() {
        assert_eq!(
            "corona:path:2:1".parse::<GraphSpec>().unwrap().build().unwrap().order(),
            4
        );
        assert!("path:0".parse::<GraphSpec>().unwrap().build().is_err());
    }
}
