//! One report row per run, as CSV or as `key: value` text.

use clap::ValueEnum;

pub const HEADER: &str = "instance,algorithm,mode,n,m,eps,k,d,result,oracle,ratio,rounds,layers,wall_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub instance: String,
    pub algorithm: &'static str,
    pub mode: &'static str,
    pub n: usize,
    pub m: usize,
    pub eps: f64,
    pub k: usize,
    pub d: Option<usize>,
    pub result: usize,
    pub oracle: usize,
    pub ratio: f64,
    pub rounds: Option<u32>,
    pub layers: Option<u32>,
    pub wall_ms: u128,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

impl Row {
    fn fields(&self) -> Vec<(&'static str, String)> {
        vec![
            ("instance", self.instance.replace(',', ";")),
            ("algorithm", self.algorithm.into()),
            ("mode", self.mode.into()),
            ("n", self.n.to_string()),
            ("m", self.m.to_string()),
            ("eps", self.eps.to_string()),
            ("k", self.k.to_string()),
            ("d", opt(self.d)),
            ("result", self.result.to_string()),
            ("oracle", self.oracle.to_string()),
            ("ratio", format!("{:.6}", self.ratio)),
            ("rounds", opt(self.rounds)),
            ("layers", opt(self.layers)),
            ("wall_ms", self.wall_ms.to_string()),
        ]
    }

    pub fn csv(&self) -> String {
        self.fields().into_iter().map(|(_, v)| v).collect::<Vec<_>>().join(",")
    }

    pub fn text(&self) -> String {
        self.fields().into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
    }

    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Csv => format!("{HEADER}\n{}\n", self.csv()),
            Format::Text => self.text(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_matches_fields() {
        let row = Row {
            instance: "a,b".into(),
            algorithm: "mis",
            mode: "local",
            n: 3,
            m: 2,
            eps: 0.4,
            k: 11,
            d: Some(160),
            result: 2,
            oracle: 2,
            ratio: 1.0,
            rounds: None,
            layers: Some(1),
            wall_ms: 5,
        };
        let names: Vec<_> = row.fields().into_iter().map(|(k, _)| k).collect();
        assert_eq!(names.join(","), HEADER);
        assert_eq!(row.csv(), "a;b,mis,local,3,2,0.4,11,160,2,2,1.000000,,1,5");
    }
}
