//! Generator spec strings (`zmod:12`, `matrix:2:2`, `tri:3:2`,
//! `product:zmod:4,zmod:9`, `paper:ex-2-1-ii`) and rings collections built
//! from them.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::constructions::{
    builtin_example, direct_product, matrix_ring, upper_triangular, zmod, ConstructionError, PaperExample, ProductRing,
};
use crate::ring::{Ring, DEFAULT_MAX_ORDER};
use crate::ringfile::{self, RingFileError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Zmod(usize),
    Matrix { base: usize, k: usize },
    Triangular { base: usize, k: usize },
    Product(Box<GeneratorSpec>, Box<GeneratorSpec>),
    Paper(PaperExample),
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Zmod(n) => write!(f, "zmod:{n}"),
            GeneratorSpec::Matrix { base, k } => write!(f, "matrix:{base}:{k}"),
            GeneratorSpec::Triangular { base, k } => write!(f, "tri:{base}:{k}"),
            GeneratorSpec::Product(a, b) => write!(f, "product:{a},{b}"),
            GeneratorSpec::Paper(p) => write!(f, "paper:{p}"),
        }
    }
}

fn bad(s: &str) -> ConstructionError {
    ConstructionError::BadArgument(format!("cannot parse generator spec `{s}`"))
}

fn two_numbers(s: &str, rest: &str) -> Result<(usize, usize), ConstructionError> {
    let (a, b) = rest.split_once(':').ok_or_else(|| bad(s))?;
    Ok((a.parse().map_err(|_| bad(s))?, b.parse().map_err(|_| bad(s))?))
}

impl FromStr for GeneratorSpec {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (head, rest) = s.split_once(':').ok_or_else(|| bad(s))?;
        match head {
            "zmod" => {
                let n: usize = rest.parse().map_err(|_| bad(s))?;
                if n == 0 {
                    return Err(bad(s));
                }
                Ok(GeneratorSpec::Zmod(n))
            }
            "matrix" => {
                let (base, k) = two_numbers(s, rest)?;
                Ok(GeneratorSpec::Matrix { base, k })
            }
            "tri" => {
                let (base, k) = two_numbers(s, rest)?;
                Ok(GeneratorSpec::Triangular { base, k })
            }
            "paper" => Ok(GeneratorSpec::Paper(rest.parse()?)),
            "product" => {
                // Factors may themselves contain commas, so try each split.
                for (i, _) in rest.match_indices(',') {
                    if let (Ok(a), Ok(b)) = (rest[..i].parse(), rest[i + 1..].parse()) {
                        return Ok(GeneratorSpec::Product(Box::new(a), Box::new(b)));
                    }
                }
                Err(bad(s))
            }
            _ => Err(bad(s)),
        }
    }
}

/// A ring in a corpus, remembering where it came from.
#[derive(Debug, Clone)]
pub struct CorpusRing {
    /// Generator spec string or file path.
    pub source: String,
    pub ring: Ring,
    /// Factor structure when the ring was built as a direct product.
    pub product: Option<ProductRing>,
}

impl CorpusRing {
    pub fn name(&self) -> &str {
        self.ring.name()
    }
}

impl GeneratorSpec {
    pub fn build(&self, max_order: usize) -> Result<CorpusRing, ConstructionError> {
        let (ring, product) = match self {
            GeneratorSpec::Zmod(n) => {
                if *n > max_order {
                    return Err(ConstructionError::OrderTooLarge {
                        order: *n,
                        max: max_order,
                    });
                }
                (zmod(*n), None)
            }
            GeneratorSpec::Matrix { base, k } => (matrix_ring(*base, *k, max_order)?, None),
            GeneratorSpec::Triangular { base, k } => (upper_triangular(*base, *k, max_order)?, None),
            GeneratorSpec::Paper(p) => {
                let ring = builtin_example(*p)?;
                if ring.order() > max_order {
                    return Err(ConstructionError::OrderTooLarge {
                        order: ring.order(),
                        max: max_order,
                    });
                }
                (ring, None)
            }
            GeneratorSpec::Product(a, b) => {
                let a = a.build(max_order)?;
                let b = b.build(max_order)?;
                let p = direct_product(&a.ring, &b.ring, max_order)?;
                (p.ring.clone(), Some(p))
            }
        };
        Ok(CorpusRing {
            source: self.to_string(),
            ring,
            product,
        })
    }
}

/// Specs of the compiled-in corpus.
pub const DEFAULT_CORPUS_SPECS: &[&str] = &[
    "zmod:2",
    "zmod:3",
    "zmod:4",
    "zmod:5",
    "zmod:6",
    "zmod:7",
    "zmod:8",
    "zmod:9",
    "zmod:10",
    "zmod:11",
    "zmod:12",
    "zmod:13",
    "zmod:14",
    "zmod:15",
    "zmod:16",
    "matrix:2:2",
    "tri:2:2",
    "tri:3:2",
    "paper:ex-2-1-ii",
    "paper:ex-2-1-iii",
    "paper:ex-2-1-iv-zp(3)",
    "product:zmod:2,zmod:4",
    "product:zmod:4,zmod:9",
];

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusRing>,
}

impl Corpus {
    pub fn from_specs<S: AsRef<str>>(specs: &[S], max_order: usize) -> Result<Corpus, ConstructionError> {
        let entries = specs
            .iter()
            .map(|s| s.as_ref().parse::<GeneratorSpec>()?.build(max_order))
            .collect::<Result<_, _>>()?;
        Ok(Corpus { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, name: &str) -> Option<&CorpusRing> {
        self.entries.iter().find(|e| e.name() == name)
    }

    pub fn push_ring(&mut self, ring: Ring) {
        self.entries.push(CorpusRing {
            source: ring.name().to_string(),
            ring,
            product: None,
        });
    }
}

pub fn default_corpus() -> Corpus {
    Corpus::from_specs(DEFAULT_CORPUS_SPECS, DEFAULT_MAX_ORDER).expect("built-in corpus specs are valid")
}

/// Every `*.json` ring file in `dir`, sorted by file name.
pub fn load_corpus_dir(dir: &Path, max_order: usize) -> Result<Corpus, RingFileError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| RingFileError::Io(dir.display().to_string(), e.to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut corpus = Corpus::default();
    for p in paths {
        let ring = ringfile::read_ring_file(&p, max_order)?;
        corpus.entries.push(CorpusRing {
            source: p.display().to_string(),
            ring,
            product: None,
        });
    }
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_round_trip() {
        for s in DEFAULT_CORPUS_SPECS {
            let spec: GeneratorSpec = s.parse().unwrap();
            assert_eq!(&spec.to_string(), s);
        }
        assert_eq!(
            "paper:ex-2-1-iv".parse::<GeneratorSpec>().unwrap().to_string(),
            "paper:ex-2-1-iv-zp(3)"
        );
    }

    #[test]
    fn bad_specs_rejected() {
        for s in ["zmod:0", "zmod:x", "matrix:2", "product:zmod:2", "nope:1", "paper:ex-3"] {
            assert!(s.parse::<GeneratorSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn nested_product_parses() {
        let spec: GeneratorSpec = "product:product:zmod:2,zmod:2,zmod:3".parse().unwrap();
        let built = spec.build(64).unwrap();
        assert_eq!(built.ring.order(), 12);
    }

    #[test]
    fn default_corpus_names_are_specs() {
        let c = default_corpus();
        assert_eq!(c.len(), DEFAULT_CORPUS_SPECS.len());
        for (e, s) in c.entries.iter().zip(DEFAULT_CORPUS_SPECS) {
            assert_eq!(e.name(), *s);
            assert_eq!(e.source, *s);
        }
        assert!(c.find("product:zmod:4,zmod:9").unwrap().product.is_some());
    }

    #[test]
    fn max_order_is_enforced() {
        assert!(matches!(
            "tri:3:2".parse::<GeneratorSpec>().unwrap().build(20),
            Err(ConstructionError::OrderTooLarge { order: 27, max: 20 })
        ));
        assert!("zmod:30".parse::<GeneratorSpec>().unwrap().build(20).is_err());
    }
}
