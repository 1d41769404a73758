//! Textual JSON formats for spaces, maps, lifted spaces and frames.
//!
//! Space: `{"points": 3, "opens": [[], [0], [0, 1, 2]]}`. Each open is a
//! strictly ascending index list, the opens appear in ascending mask order
//! without repetition, and both `[]` and the full list must be present.
//! Map: `{"dom": <space>, "cod": <space>, "map": [..]}`.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::filters::{FilterKind, LiftedSpace};
use crate::frame::FiniteFrame;
use crate::map::ContinuousMap;
use crate::reflect::Reflection;
use crate::space::FiniteSpace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub dom: SpaceFile,
    pub cod: SpaceFile,
    pub map: Vec<usize>,
}

/// A lifted space plus the generator of the filter behind each point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftedFile {
    pub kind: FilterKind,
    pub space: SpaceFile,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReflectionFile {
    pub space: SpaceFile,
    pub unit: MapFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameFile {
    pub elements: usize,
    pub leq: Vec<[usize; 2]>,
}

impl From<&FiniteSpace> for SpaceFile {
    fn from(x: &FiniteSpace) -> Self {
        SpaceFile {
            points: x.len(),
            opens: x.opens().iter().map(|&o| bits::to_vec(o)).collect(),
        }
    }
}

impl From<&ContinuousMap> for MapFile {
    fn from(f: &ContinuousMap) -> Self {
        MapFile {
            dom: f.dom().into(),
            cod: f.cod().into(),
            map: f.values().to_vec(),
        }
    }
}

impl From<&LiftedSpace> for LiftedFile {
    fn from(l: &LiftedSpace) -> Self {
        LiftedFile {
            kind: l.kind(),
            space: l.space().into(),
            generators: l.points().iter().map(|p| bits::to_vec(p.generator())).collect(),
        }
    }
}

impl From<&Reflection> for ReflectionFile {
    fn from(r: &Reflection) -> Self {
        ReflectionFile {
            space: (&r.space).into(),
            unit: (&r.unit).into(),
        }
    }
}

impl From<&FiniteFrame> for FrameFile {
    fn from(l: &FiniteFrame) -> Self {
        let mut leq = Vec::new();
        for a in 0..l.len() {
            for b in 0..l.len() {
                if a != b && l.le(a, b) {
                    leq.push([a, b]);
                }
            }
        }
        FrameFile { elements: l.len(), leq }
    }
}

impl SpaceFile {
    /// Converts to a space, rejecting anything not already canonical.
    pub fn to_space(&self) -> Result<FiniteSpace> {
        let n = self.points;
        let mut masks = Vec::with_capacity(self.opens.len());
        for (i, open) in self.opens.iter().enumerate() {
            if open.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidInput(format!(
                    "open #{i} {open:?} is not strictly ascending"
                )));
            }
            if let Some(&p) = open.iter().find(|&&p| p >= n) {
                return Err(Error::InvalidInput(format!(
                    "open #{i} mentions point {p}, but there are only {n} points"
                )));
            }
            masks.push(bits::from_members(open.iter().copied()));
        }
        if masks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(
                "opens must be listed once each, in ascending mask order".into(),
            ));
        }
        let space = FiniteSpace::new(n, masks)?;
        if space.opens().len() != self.opens.len() {
            return Err(Error::InvalidInput("duplicate opens".into()));
        }
        Ok(space)
    }
}

impl MapFile {
    pub fn to_map(&self) -> Result<ContinuousMap> {
        ContinuousMap::new(self.dom.to_space()?, self.cod.to_space()?, self.map.clone())
    }
}

impl FrameFile {
    pub fn to_frame(&self) -> Result<FiniteFrame> {
        let pairs: Vec<(usize, usize)> = self.leq.iter().map(|&[a, b]| (a, b)).collect();
        FiniteFrame::from_pairs(self.elements, &pairs)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

pub fn parse_space(text: &str) -> Result<FiniteSpace> {
    parse::<SpaceFile>(text)?.to_space()
}

pub fn parse_map(text: &str) -> Result<ContinuousMap> {
    parse::<MapFile>(text)?.to_map()
}

pub fn parse_frame(text: &str) -> Result<FiniteFrame> {
    parse::<FrameFile>(text)?.to_frame()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable value")
}

pub fn space_to_json(x: &FiniteSpace) -> String {
    to_json(&SpaceFile::from(x))
}

pub fn map_to_json(f: &ContinuousMap) -> String {
    to_json(&MapFile::from(f))
}

pub fn mask_lists(masks: &[Mask]) -> Vec<Vec<usize>> {
    masks.iter().map(|&m| bits::to_vec(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_example() {
        let x = parse_space(r#"{"points": 3, "opens": [[], [0], [0,1,2]]}"#).unwrap();
        assert_eq!(x, FiniteSpace::from_generators(3, &[1]).unwrap());
        assert_eq!(space_to_json(&x), r#"{"points":3,"opens":[[],[0],[0,1,2]]}"#);
    }

    #[test]
    fn rejects_non_canonical_input() {
        let cases = [
            r#"{"points": 3, "opens": [[0], [], [0,1,2]]}"#,
            r#"{"points": 3, "opens": [[], [0], [0], [0,1,2]]}"#,
            r#"{"points": 3, "opens": [[], [0], [2,1,0]]}"#,
            r#"{"points": 3, "opens": [[], [0]]}"#,
            r#"{"points": 3, "opens": [[], [0], [3]]}"#,
            r#"{"points": 3, "opens": [[], [0], [1], [0,1,2]]}"#,
            r#"{"points": 0, "opens": [[]]}"#,
            r#"{"points": 2, "opens": [[], [0,1]], "extra": 1}"#,
            r#"not json"#,
        ];
        for case in cases {
            assert!(matches!(parse_space(case), Err(Error::InvalidInput(_))), "{case}");
        }
    }

    #[test]
    fn map_format() {
        let s = FiniteSpace::sierpinski();
        let f = ContinuousMap::identity(&s);
        let text = map_to_json(&f);
        assert_eq!(parse_map(&text).unwrap(), f);
        let bad = r#"{"dom":{"points":2,"opens":[[],[1],[0,1]]},"cod":{"points":2,"opens":[[],[1],[0,1]]},"map":[1,0]}"#;
        assert!(matches!(parse_map(bad), Err(Error::NotContinuous { .. })));
    }

    #[test]
    fn frame_format() {
        let l = parse_frame(r#"{"elements": 3, "leq": [[0,1],[1,2]]}"#).unwrap();
        assert_eq!(l.len(), 3);
        assert!(l.le(0, 2));
        let back = to_json(&FrameFile::from(&l));
        assert_eq!(back, r#"{"elements":3,"leq":[[0,1],[0,2],[1,2]]}"#);
        assert!(parse_frame(r#"{"elements": 3, "leq": [[0,1],[0,2]]}"#).is_err());
    }
}
