//! Named places and the coordinate syntax accepted on the command line.

use std::collections::HashMap;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;
use spherekit::LatLon;

pub const BUNDLED_CITIES: &str = include_str!("../data/cities.csv");

#[derive(Debug, Deserialize)]
struct Row {
    name: String,
    lat: f64,
    lon: f64,
}

/// Named coordinates loaded from `name,lat,lon` CSV with signed decimal
/// degrees. Lookups ignore case and any non-alphanumeric characters, so
/// `PuertoRico`, `puerto-rico` and `Puerto Rico` are the same city.
#[derive(Debug, Default)]
pub struct CityTable {
    by_key: HashMap<String, (String, LatLon)>,
}

fn key(name: &str) -> String {
    name.chars()
        .filter(|c| c.is_alphanumeric())
        .flat_map(char::to_lowercase)
        .collect()
}

impl CityTable {
    pub fn from_csv(data: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(data.as_bytes());
        let mut table = CityTable::default();
        for (i, row) in reader.deserialize::<Row>().enumerate() {
            let row = row.with_context(|| format!("city table row {}", i + 1))?;
            let p =
                LatLon::new(row.lat, row.lon).with_context(|| format!("city {:?}", row.name))?;
            let k = key(&row.name);
            if k.is_empty() {
                bail!("city table row {} has an empty name", i + 1);
            }
            if let Some((existing, _)) = table.by_key.get(&k) {
                bail!("duplicate city {:?} (already have {existing:?})", row.name);
            }
            table.by_key.insert(k, (row.name, p));
        }
        Ok(table)
    }

    pub fn bundled() -> Self {
        Self::from_csv(BUNDLED_CITIES).expect("bundled city table is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let data =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_csv(&data)
    }

    pub fn get(&self, name: &str) -> Option<(&str, LatLon)> {
        self.by_key
            .get(&key(name))
            .map(|(name, p)| (name.as_str(), *p))
    }

    pub fn names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.by_key.values().map(|(n, _)| n.as_str()).collect();
        names.sort_unstable();
        names
    }
}

/// One angle: `41N`, `74W`, `41.5°N`, `-74` or `74.0`.
fn parse_angle(text: &str, positive: char, negative: char) -> Result<f64> {
    let t = text.trim().replace('°', "");
    let upper = t.to_ascii_uppercase();
    let (number, sign) = match upper.chars().last() {
        Some(c) if c == positive => (&t[..t.len() - 1], 1.0),
        Some(c) if c == negative => (&t[..t.len() - 1], -1.0),
        Some(c) if c.is_ascii_alphabetic() => {
            bail!("{text:?}: expected a {positive}/{negative} suffix or signed degrees")
        }
        _ => (t.as_str(), 1.0),
    };
    let value: f64 = number
        .trim()
        .parse()
        .map_err(|_| anyhow!("{text:?} is not an angle"))?;
    if sign < 0.0 && value < 0.0 {
        bail!("{text:?}: use either a sign or a compass suffix, not both");
    }
    Ok(sign * value)
}

pub fn parse_lat(text: &str) -> Result<f64> {
    parse_angle(text, 'N', 'S')
}

pub fn parse_lon(text: &str) -> Result<f64> {
    parse_angle(text, 'E', 'W')
}

pub fn latlon(lat: &str, lon: &str) -> Result<LatLon> {
    Ok(LatLon::new(parse_lat(lat)?, parse_lon(lon)?)?)
}

/// A place resolved from the command line, with the label to print for it.
#[derive(Clone, Debug)]
pub struct Place {
    pub label: String,
    pub at: LatLon,
}

impl CityTable {
    /// Resolves `41N/74W`, `0N,90E`, `41,-74` or a city name.
    pub fn resolve(&self, text: &str) -> Result<Place> {
        if let Some((lat, lon)) = text.split_once(['/', ',']) {
            return Ok(Place {
                label: text.to_string(),
                at: latlon(lat, lon).with_context(|| format!("coordinate {text:?}"))?,
            });
        }
        match self.get(text) {
            Some((name, at)) => Ok(Place {
                label: name.to_string(),
                at,
            }),
            None => bail!(
                "unknown city {text:?}; known cities: {}",
                self.names().join(", ")
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compass_and_signed_angles() {
        assert_eq!(parse_lat("41N").unwrap(), 41.0);
        assert_eq!(parse_lat("56s").unwrap(), -56.0);
        assert_eq!(parse_lon("74W").unwrap(), -74.0);
        assert_eq!(parse_lon("-74").unwrap(), -74.0);
        assert_eq!(parse_lon("2.5°E").unwrap(), 2.5);
        assert!(parse_lat("41E").is_err());
        assert!(parse_lon("-74W").is_err());
        assert!(parse_lat("north").is_err());
        assert!(latlon("91N", "0").is_err());
    }

    #[test]
    fn bundled_cities() {
        let t = CityTable::bundled();
        let (name, p) = t.get("NYC").unwrap();
        assert_eq!((name, p.lat(), p.lon()), ("nyc", 41.0, -74.0));
        assert_eq!(t.get("PuertoRico").unwrap().0, "puerto-rico");
        assert_eq!(t.get("paris").unwrap().1.lon(), 2.0);
        assert_eq!(t.get("paris-3e").unwrap().1.lon(), 3.0);
        assert!(t.get("london").is_none());
    }

    #[test]
    fn resolve_places() {
        let t = CityTable::bundled();
        assert_eq!(t.resolve("0N,90E").unwrap().at.lon(), 90.0);
        assert_eq!(t.resolve("41N/74W").unwrap().at.lat(), 41.0);
        assert_eq!(t.resolve("Bermuda").unwrap().label, "bermuda");
        assert!(t.resolve("Atlantis").is_err());
        assert!(t.resolve("95N,0E").is_err());
    }

    #[test]
    fn duplicate_names_are_rejected() {
        let err = CityTable::from_csv("name,lat,lon\nParis,49,2\nPARIS,49,3\n").unwrap_err();
        assert!(err.to_string().contains("duplicate"));
        assert!(CityTable::from_csv("name,lat,lon\nx,100,0\n").is_err());
    }
}
