//! Finite quivers, the Ext-quiver of a dimension table, and the predicates
//! that decide which quiver-like categories have a strong generator or a
//! Serre functor.
//!
//! Arrows are stored as index pairs into the vertex list; parallel arrows and
//! loops are allowed. Labels are only used for I/O and for comparing quivers
//! produced from labelled families.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and arrows given as index pairs.
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() || v.chars().any(char::is_whitespace) {
                return Err(Error::InvalidQuiver(format!("bad vertex label `{v}`")));
            }
            if seen.insert(v.as_str(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let n = vertices.len();
        if let Some(&(s, t)) = arrows.iter().find(|&&(s, t)| s >= n || t >= n) {
            return Err(Error::InvalidQuiver(format!(
                "arrow ({s}, {t}) has an undeclared endpoint"
            )));
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Builds a quiver from labelled arrows.
    pub fn from_labels(vertices: &[&str], arrows: &[(&str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        let index = |v: &str| {
            vertices
                .iter()
                .position(|w| w == v)
                .ok_or_else(|| Error::UnknownVertex(v.to_string()))
        };
        let arrows = arrows
            .iter()
            .map(|&(s, t)| Ok((index(s)?, index(t)?)))
            .collect::<Result<Vec<_>>>()?;
        Quiver::new(vertices, arrows)
    }

    /// Vertices `1..=n`, no arrows.
    pub fn discrete(n: usize) -> Self {
        Quiver {
            vertices: (1..=n).map(|i| i.to_string()).collect(),
            arrows: Vec::new(),
        }
    }

    /// The linear quiver `1 -> 2 -> ... -> n`.
    pub fn linear(n: usize) -> Self {
        let mut q = Quiver::discrete(n);
        q.arrows = (1..n).map(|i| (i - 1, i)).collect();
        q
    }

    /// The oriented cycle `1 -> 2 -> ... -> n -> 1`; `n = 1` is a single loop.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 1, "oriented cycle needs at least one vertex");
        let mut q = Quiver::discrete(n);
        q.arrows = (0..n).map(|i| (i, (i + 1) % n)).collect();
        q
    }

    /// Two vertices with `m` parallel arrows `1 -> 2`.
    pub fn kronecker(m: usize) -> Self {
        let mut q = Quiver::discrete(2);
        q.arrows = vec![(0, 1); m];
        q
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    /// `m[i][j]` = number of arrows from `i` to `j`.
    pub fn arrow_multiplicities(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0; n]; n];
        for &(s, t) in &self.arrows {
            m[s][t] += 1;
        }
        m
    }

    /// Same labels in the same order and the same arrow multiset.
    pub fn same_multigraph(&self, other: &Quiver) -> bool {
        self.vertices == other.vertices
            && self.arrow_multiplicities() == other.arrow_multiplicities()
    }

    /// Same arrow multiset after matching vertices by position, ignoring labels.
    pub fn same_arrows(&self, other: &Quiver) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.arrow_multiplicities() == other.arrow_multiplicities()
    }

    /// Vertex sets of the connected components of the underlying graph, in
    /// order of their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(s, t) in &self.arrows {
            adj[s].push(t);
            adj[t].push(s);
        }
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// No oriented cycles (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertex_count();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop_front() {
            removed += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        removed == n
    }

    /// True iff the quiver is exactly the oriented cycle on all its vertices.
    pub fn is_oriented_cycle(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 || self.arrows.len() != n || !self.is_connected() {
            return false;
        }
        let mut out = vec![0usize; n];
        let mut inc = vec![0usize; n];
        for &(s, t) in &self.arrows {
            out[s] += 1;
            inc[t] += 1;
        }
        out.iter().all(|&d| d == 1) && inc.iter().all(|&d| d == 1)
    }

    /// Subquiver on the given vertices (in the given order), keeping every
    /// arrow with both endpoints inside.
    pub fn restrict(&self, keep: &[usize]) -> Quiver {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Quiver {
            vertices: keep.iter().map(|&v| self.vertices[v].clone()).collect(),
            arrows: self
                .arrows
                .iter()
                .filter_map(|(s, t)| Some((*pos.get(s)?, *pos.get(t)?)))
                .collect(),
        }
    }

    /// Parses the line format: `vertices: v1 v2 ...` followed by `arrow: src dst` lines.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut vertices: Option<Vec<String>> = None;
        let mut arrows = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| Error::parse(line, "expected `vertices:` or `arrow:`"))?;
            match key.trim() {
                "vertices" => {
                    if vertices.is_some() {
                        return Err(Error::parse(line, "vertices declared twice"));
                    }
                    vertices = Some(rest.split_whitespace().map(str::to_string).collect());
                }
                "arrow" => {
                    let ends: Vec<&str> = rest.split_whitespace().collect();
                    if ends.len() != 2 {
                        return Err(Error::parse(line, "arrow needs exactly two endpoints"));
                    }
                    arrows.push((ends[0].to_string(), ends[1].to_string()));
                }
                other => return Err(Error::parse(other, "unknown key")),
            }
        }
        let vertices = vertices.ok_or_else(|| Error::parse(text, "missing `vertices:` line"))?;
        let vs: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let arrs: Vec<(&str, &str)> = arrows.iter().map(|(s, t)| (s.as_str(), t.as_str())).collect();
        Quiver::from_labels(&vs, &arrs)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.vertices.join(" "));
        for &(a, b) in &self.arrows {
            s.push_str(&format!("arrow: {} {}\n", self.vertices[a], self.vertices[b]));
        }
        s
    }

    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| (self.vertices[s].clone(), self.vertices[t].clone()))
                .collect(),
        }
    }

    pub fn from_json(doc: &QuiverJson) -> Result<Self> {
        let vs: Vec<&str> = doc.vertices.iter().map(String::as_str).collect();
        let arrs: Vec<(&str, &str)> = doc.arrows.iter().map(|(s, t)| (s.as_str(), t.as_str())).collect();
        Quiver::from_labels(&vs, &arrs)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON mirror of the text format: `{"vertices":[...],"arrows":[[src,dst],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<(String, String)>,
}

/// Square table of `dim Ext^1(object_i, object_j)` for a labelled family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtMatrix {
    pub labels: Vec<String>,
    pub ext1: Vec<Vec<usize>>,
}

impl ExtMatrix {
    pub fn new(labels: Vec<String>, ext1: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if ext1.len() != n || ext1.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidQuiver(format!(
                "Ext matrix must be {n}x{n} to match its labels"
            )));
        }
        Ok(ExtMatrix { labels, ext1 })
    }
}

/// `M[i][j] = dim Ext^1(s_i, s_j)`, which for simple modules is the number of
/// arrows from `j` to `i`.
pub fn simple_ext_dims(q: &Quiver) -> ExtMatrix {
    let arrows = q.arrow_multiplicities();
    let n = q.vertex_count();
    let ext1 = (0..n).map(|i| (0..n).map(|j| arrows[j][i]).collect()).collect();
    ExtMatrix {
        labels: q.vertices.clone(),
        ext1,
    }
}

/// Ext-quiver: `dim Ext^1(t_j, t_i)` arrows from `i` to `j`.
pub fn ext_quiver(m: &ExtMatrix) -> Quiver {
    let n = m.labels.len();
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            arrows.extend(std::iter::repeat((i, j)).take(m.ext1[j][i]));
        }
    }
    Quiver {
        vertices: m.labels.clone(),
        arrows,
    }
}

/// The bounded derived category of nilpotent representations has a strong
/// generator iff the (finite) quiver is acyclic.
pub fn has_strong_generator(q: &Quiver) -> bool {
    q.is_acyclic()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "n")]
pub enum SerreClass {
    /// Every vertex lies on finitely many paths.
    FinitePaths,
    /// The quiver is the oriented cycle with this many vertices.
    Cycle(usize),
    NoSerre,
}

/// Which connected quivers give a quiver-like category with a Serre functor.
/// The bi-infinite line is out of range for finite quivers.
pub fn serre_class(q: &Quiver) -> Result<SerreClass> {
    if !q.is_connected() {
        return Err(Error::DisconnectedQuiver);
    }
    Ok(if q.is_acyclic() {
        SerreClass::FinitePaths
    } else if q.is_oriented_cycle() {
        SerreClass::Cycle(q.vertex_count())
    } else {
        SerreClass::NoSerre
    })
}
