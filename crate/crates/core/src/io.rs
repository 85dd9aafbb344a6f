//! Point-set and witness files.
//!
//! JSON files hold `{"k", "m", "points": [{"x", "y", "color"}]}` with every
//! coordinate written as an exact `"p/q"` string. CSV files hold one point
//! per row as `x_num,x_den,y_num,y_den,color`. `m` is `null` for sets whose
//! classes differ in size.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::{scalar_string, Point};
use crate::point_set::{Color, ColoredPointSet, PolygonWitness};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilePoint {
    #[serde(with = "scalar_string")]
    pub x: Scalar,
    #[serde(with = "scalar_string")]
    pub y: Scalar,
    pub color: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetFile {
    pub k: usize,
    pub m: Option<usize>,
    pub points: Vec<FilePoint>,
}

impl PointSetFile {
    pub fn from_set(set: &ColoredPointSet) -> Self {
        PointSetFile {
            k: set.k(),
            m: set.m(),
            points: set
                .points()
                .iter()
                .zip(set.colors())
                .map(|(p, c)| FilePoint { x: p.x.clone(), y: p.y.clone(), color: c.0 })
                .collect(),
        }
    }

    pub fn to_set(&self) -> Result<ColoredPointSet, Error> {
        let points = self.points.iter().map(|p| Point::new(p.x.clone(), p.y.clone())).collect();
        let colors = self.points.iter().map(|p| Color(p.color)).collect();
        match self.m {
            Some(m) => ColoredPointSet::new_balanced(points, colors, self.k, m),
            None => ColoredPointSet::new(points, colors, self.k),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("point sets always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["x_num", "x_den", "y_num", "y_den", "color"]).unwrap();
        for p in &self.points {
            w.write_record([
                p.x.numer().to_string(),
                p.x.denom().to_string(),
                p.y.numer().to_string(),
                p.y.denom().to_string(),
                p.color.to_string(),
            ])
            .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    /// `k` is the largest color present; `m` is inferred from class sizes.
    pub fn from_csv(text: &str) -> Result<Self, Error> {
        let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
        let perr = |e: String| Error::Parse(e);
        let mut points = Vec::new();
        for (line, rec) in r.records().enumerate() {
            let rec = rec.map_err(|e| perr(e.to_string()))?;
            if rec.len() != 5 {
                return Err(perr(format!("row {}: expected 5 fields, got {}", line + 1, rec.len())));
            }
            let frac = |a: &str, b: &str| -> Result<Scalar, Error> { format!("{a}/{b}").parse() };
            points.push(FilePoint {
                x: frac(&rec[0], &rec[1])?,
                y: frac(&rec[2], &rec[3])?,
                color: rec[4].parse().map_err(|_| perr(format!("row {}: bad color", line + 1)))?,
            });
        }
        let k = points.iter().map(|p| p.color as usize).max().unwrap_or(0);
        let mut sizes = vec![0usize; k];
        for p in &points {
            if p.color >= 1 {
                sizes[p.color as usize - 1] += 1;
            }
        }
        let m = sizes.first().copied().filter(|&f| sizes.iter().all(|&s| s == f));
        Ok(PointSetFile { k, m, points })
    }
}

fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

/// Reads a point set, picking the format from the extension.
pub fn read_point_set(path: &Path) -> Result<ColoredPointSet, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let file = if is_csv(path) { PointSetFile::from_csv(&text)? } else { PointSetFile::from_json(&text)? };
    file.to_set()
}

pub fn point_set_to_string(set: &ColoredPointSet, csv: bool) -> String {
    let file = PointSetFile::from_set(set);
    if csv {
        file.to_csv()
    } else {
        file.to_json()
    }
}

pub fn write_point_set(path: &Path, set: &ColoredPointSet) -> Result<(), Error> {
    fs::write(path, point_set_to_string(set, is_csv(path))).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub shape: String,
    pub vertices: Vec<usize>,
    pub convex: bool,
    pub empty: bool,
    pub rainbow: bool,
}

impl From<&PolygonWitness> for WitnessRecord {
    fn from(w: &PolygonWitness) -> Self {
        WitnessRecord {
            shape: w.shape_name().to_string(),
            vertices: w.vertices.clone(),
            convex: w.convex,
            empty: w.empty,
            rainbow: w.rainbow,
        }
    }
}

impl From<&WitnessRecord> for PolygonWitness {
    fn from(r: &WitnessRecord) -> Self {
        PolygonWitness { vertices: r.vertices.clone(), convex: r.convex, empty: r.empty, rainbow: r.rainbow }
    }
}

pub fn witnesses_to_json(ws: &[PolygonWitness]) -> String {
    let recs: Vec<WitnessRecord> = ws.iter().map(WitnessRecord::from).collect();
    let mut s = serde_json::to_string_pretty(&recs).expect("witnesses always serialize");
    s.push('\n');
    s
}

pub fn witnesses_from_json(text: &str) -> Result<Vec<PolygonWitness>, Error> {
    let recs: Vec<WitnessRecord> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(recs.iter().map(PolygonWitness::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ColoredPointSet {
        let pts = vec![
            Point::new("1/3".parse().unwrap(), "-2/7".parse().unwrap()),
            Point::from_ints(5, 1),
            Point::new("7/2".parse().unwrap(), "9".parse().unwrap()),
        ];
        ColoredPointSet::new(pts, vec![Color(2), Color(1), Color(3)], 3).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let s = sample();
        let text = point_set_to_string(&s, false);
        assert!(text.contains("\"1/3\""));
        assert!(text.contains("\"5/1\""));
        let back = PointSetFile::from_json(&text).unwrap().to_set().unwrap();
        assert_eq!(back, s);
        assert_eq!(point_set_to_string(&back, false), text);
    }

    #[test]
    fn csv_round_trip() {
        let s = sample();
        let text = point_set_to_string(&s, true);
        assert!(text.starts_with("x_num,x_den,y_num,y_den,color\n1,3,-2,7,2\n"));
        let back = PointSetFile::from_csv(&text).unwrap().to_set().unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(PointSetFile::from_json("{\"k\":2}").is_err());
        let bad = "{\"k\":2,\"m\":1,\"points\":[{\"x\":\"1/0\",\"y\":\"0\",\"color\":1}]}";
        assert!(PointSetFile::from_json(bad).is_err());
        let unbalanced = "{\"k\":2,\"m\":1,\"points\":[{\"x\":\"0\",\"y\":\"0\",\"color\":1},\
                          {\"x\":\"1\",\"y\":\"0\",\"color\":1},{\"x\":\"2\",\"y\":\"5\",\"color\":2}]}";
        assert!(PointSetFile::from_json(unbalanced).unwrap().to_set().is_err());
    }

    #[test]
    fn witness_round_trip() {
        let ws = vec![PolygonWitness { vertices: vec![0, 1, 2], convex: true, empty: true, rainbow: true }];
        let text = witnesses_to_json(&ws);
        assert!(text.contains("\"triangle\""));
        assert_eq!(witnesses_from_json(&text).unwrap(), ws);
    }
}
