use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub param_name: Option<String>,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    pub scale: Scale,
}

impl GridSpec {
    /// Parses `start,stop,count[,log]`, optionally prefixed by `NAME=`.
    pub fn parse(text: &str, named: bool) -> Result<Self, CliError> {
        let bad = |why: &str| CliError::Usage(format!("malformed grid `{text}`: {why}"));
        let (param_name, body) = if named {
            let (name, body) = text
                .split_once('=')
                .ok_or_else(|| bad("expected NAME=start,stop,count[,log]"))?;
            (Some(name.trim().to_string()), body)
        } else {
            (None, text)
        };
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() != 3 && fields.len() != 4 {
            return Err(bad("expected start,stop,count[,log]"));
        }
        let start: f64 = fields[0]
            .parse()
            .map_err(|_| bad("start is not a number"))?;
        let stop: f64 = fields[1].parse().map_err(|_| bad("stop is not a number"))?;
        let count: usize = fields[2]
            .parse()
            .map_err(|_| bad("count is not a positive integer"))?;
        let scale = match fields.get(3) {
            None => Scale::Linear,
            Some(&"log") => Scale::Log,
            Some(&"lin") | Some(&"linear") => Scale::Linear,
            Some(other) => return Err(bad(&format!("unknown scale `{other}`"))),
        };
        let spec = GridSpec {
            param_name,
            start,
            stop,
            count,
            scale,
        };
        spec.validate().map_err(|why| bad(&why))?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), String> {
        if let Some(name) = &self.param_name {
            if name.is_empty() {
                return Err("empty parameter name".into());
            }
        }
        if self.count == 0 {
            return Err("count must be positive".into());
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err("bounds must be finite".into());
        }
        if self.count > 1 && self.start >= self.stop {
            return Err("start must be below stop".into());
        }
        if self.scale == Scale::Log && self.start <= 0.0 {
            return Err("log scale needs start > 0".into());
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let last = self.count - 1;
        let step = |i: usize| i as f64 / last as f64;
        (0..self.count)
            .map(|i| {
                if i == 0 {
                    self.start
                } else if i == last {
                    self.stop
                } else {
                    match self.scale {
                        Scale::Linear => self.start + (self.stop - self.start) * step(i),
                        Scale::Log => {
                            let (l0, l1) = (self.start.log10(), self.stop.log10());
                            10f64.powf(l0 + (l1 - l0) * step(i))
                        }
                    }
                }
            })
            .collect()
    }
}
