use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Graph, GraphError};

/// One instance of a parametrized family.
///
/// Compact text form (also the JSON form): `ring:1,1,1,5`,
/// `biclique:7:0,1;2,3;4,5,6`, `kmn:3,10`, `theta:3,2`, `gentheta:2,3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Cliques of the given sizes arranged in a cycle, consecutive cliques
    /// completely joined.
    Ring(Vec<usize>),
    /// A clique `C` on `n` vertices and a clique `D` with one vertex per
    /// set, joined to the vertices of `C` in that set.
    Biclique {
        n: usize,
        sets: Vec<Vec<usize>>,
    },
    CompleteBipartite {
        m: usize,
        n: usize,
    },
    /// `p` internally disjoint paths with `s` edges each between two
    /// common endpoints.
    Theta {
        s: usize,
        p: usize,
    },
    /// `n` internally disjoint paths of lengths `ns - n + 1, ..., ns`
    /// between two common endpoints.
    GenTheta {
        s: usize,
        n: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |m: String| Err(GraphError::InvalidSpec(m));
        match self {
            FamilySpec::Ring(a) => {
                if a.len() < 3 {
                    return bad("a ring needs at least 3 cliques".into());
                }
                if a.contains(&0) {
                    return bad("clique sizes must be positive".into());
                }
            }
            FamilySpec::Biclique { n, sets } => {
                if sets.is_empty() {
                    return bad("a biclique needs at least one set".into());
                }
                for s in sets {
                    if let Some(&x) = s.iter().find(|&&x| x >= *n) {
                        return bad(format!("set element {x} is not below n = {n}"));
                    }
                    let mut t = s.clone();
                    t.sort_unstable();
                    t.dedup();
                    if t.len() != s.len() {
                        return bad("repeated element in a set".into());
                    }
                }
            }
            FamilySpec::CompleteBipartite { m, n } => {
                if *m == 0 || *n == 0 {
                    return bad("both sides must be nonempty".into());
                }
            }
            FamilySpec::Theta { s, p } => {
                if *s < 2 || *p < 2 {
                    return bad("theta needs s >= 2 and p >= 2".into());
                }
            }
            FamilySpec::GenTheta { s, n } => {
                if *s < 2 || *n < 2 {
                    return bad("generalised theta needs s >= 2 and n >= 2".into());
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Ring(a) => a.iter().sum(),
            FamilySpec::Biclique { n, sets } => n + sets.len(),
            FamilySpec::CompleteBipartite { m, n } => m + n,
            FamilySpec::Theta { s, p } => 2 + p * (s - 1),
            FamilySpec::GenTheta { s, n } => 2 + path_lengths(*s, *n).map(|l| l - 1).sum::<usize>(),
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        self.validate()?;
        let mut g = Graph::empty(self.vertex_count());
        match self {
            FamilySpec::Ring(a) => {
                let mut start = Vec::with_capacity(a.len());
                let mut off = 0;
                for &s in a {
                    start.push(off);
                    off += s;
                }
                let block = |i: usize| start[i]..start[i] + a[i];
                for i in 0..a.len() {
                    for u in block(i) {
                        for v in u + 1..start[i] + a[i] {
                            g.add_edge(u, v);
                        }
                        for v in block((i + 1) % a.len()) {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
            FamilySpec::Biclique { n, sets } => {
                let total = g.vertex_count();
                for u in 0..*n {
                    for v in u + 1..*n {
                        g.add_edge(u, v);
                    }
                }
                for i in *n..total {
                    for j in i + 1..total {
                        g.add_edge(i, j);
                    }
                }
                for (i, set) in sets.iter().enumerate() {
                    for &c in set {
                        g.add_edge(n + i, c);
                    }
                }
            }
            FamilySpec::CompleteBipartite { m, n } => {
                for u in 0..*m {
                    for v in 0..*n {
                        g.add_edge(u, m + v);
                    }
                }
            }
            FamilySpec::Theta { s, p } => add_paths(&mut g, std::iter::repeat_n(*s, *p)),
            FamilySpec::GenTheta { s, n } => add_paths(&mut g, path_lengths(*s, *n)),
        }
        Ok(g)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FamilySpec::Ring(_) => "ring",
            FamilySpec::Biclique { .. } => "biclique",
            FamilySpec::CompleteBipartite { .. } => "kmn",
            FamilySpec::Theta { .. } => "theta",
            FamilySpec::GenTheta { .. } => "gentheta",
        }
    }
}

fn path_lengths(s: usize, n: usize) -> impl Iterator<Item = usize> {
    (n * s + 1 - n)..=(n * s)
}

/// Vertices 0 and 1 are the shared endpoints; internal vertices follow.
fn add_paths(g: &mut Graph, lengths: impl Iterator<Item = usize>) {
    let mut next = 2;
    for len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1);
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Ring(a) => write!(f, "ring:{}", join(a, ",")),
            FamilySpec::Biclique { n, sets } => {
                let sets: Vec<String> = sets.iter().map(|s| join(s, ",")).collect();
                write!(f, "biclique:{n}:{}", sets.join(";"))
            }
            FamilySpec::CompleteBipartite { m, n } => write!(f, "kmn:{m},{n}"),
            FamilySpec::Theta { s, p } => write!(f, "theta:{s},{p}"),
            FamilySpec::GenTheta { s, n } => write!(f, "gentheta:{s},{n}"),
        }
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<usize>, GraphError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| GraphError::InvalidSpec(format!("bad number '{}'", t.trim()))))
        .collect()
}

pub(crate) fn parse_sets(s: &str) -> Result<Vec<Vec<usize>>, GraphError> {
    s.split(';').map(parse_list).collect()
}

fn pair(s: &str) -> Result<(usize, usize), GraphError> {
    match parse_list(s)?.as_slice() {
        [a, b] => Ok((*a, *b)),
        _ => Err(GraphError::InvalidSpec(format!("expected two numbers, got '{s}'"))),
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| GraphError::InvalidSpec(format!("missing ':' in '{s}'")))?;
        let spec = match kind.trim() {
            "ring" => FamilySpec::Ring(parse_list(rest)?),
            "biclique" => {
                let (n, sets) =
                    rest.split_once(':').ok_or_else(|| GraphError::InvalidSpec("expected biclique:N:SETS".into()))?;
                let n = n.trim().parse().map_err(|_| GraphError::InvalidSpec(format!("bad n '{n}'")))?;
                FamilySpec::Biclique { n, sets: parse_sets(sets)? }
            }
            "kmn" => {
                let (m, n) = pair(rest)?;
                FamilySpec::CompleteBipartite { m, n }
            }
            "theta" => {
                let (s, p) = pair(rest)?;
                FamilySpec::Theta { s, p }
            }
            "gentheta" => {
                let (s, n) = pair(rest)?;
                FamilySpec::GenTheta { s, n }
            }
            other => return Err(GraphError::InvalidSpec(format!("unknown family '{other}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds() {
        let c4 = FamilySpec::Ring(vec![1, 1, 1, 1]).build().unwrap();
        assert_eq!(c4, Graph::cycle(4));
        let t = FamilySpec::Theta { s: 2, p: 3 }.build().unwrap();
        assert_eq!((t.vertex_count(), t.edge_count()), (5, 6));
        assert_eq!(FamilySpec::Ring(vec![1, 1, 1, 5]).build().unwrap().vertex_count(), 8);
        let g = FamilySpec::GenTheta { s: 2, n: 2 }.build().unwrap();
        assert_eq!(g, {
            // a 7-cycle, relabelled: 0 a b 1 c d e 0
            let mut h = Graph::empty(7);
            for (u, v) in [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 6), (6, 1)] {
                h.add_edge(u, v);
            }
            h
        });
        assert_eq!(FamilySpec::GenTheta { s: 2, n: 3 }.vertex_count(), 14);
        let b = FamilySpec::Biclique { n: 3, sets: vec![vec![0], vec![1, 2]] }.build().unwrap();
        assert_eq!((b.vertex_count(), b.edge_count()), (5, 3 + 1 + 3));
    }

    #[test]
    fn text_forms() {
        for s in ["ring:1,1,1,5", "biclique:7:0,1;2,3;4,5,6", "kmn:3,10", "theta:3,2", "gentheta:2,3"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("ring:1,2".parse::<FamilySpec>().is_err());
        assert!("theta:1,2".parse::<FamilySpec>().is_err());
        assert!("biclique:2:0,2".parse::<FamilySpec>().is_err());
        assert!("cube:3".parse::<FamilySpec>().is_err());
        let j = serde_json::to_string(&FamilySpec::Ring(vec![1, 1, 1, 5])).unwrap();
        assert_eq!(j, "\"ring:1,1,1,5\"");
    }
}
