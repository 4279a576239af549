use std::collections::HashMap;
use std::fs::File;
use std::io::BufReader;
use std::sync::Mutex;

use super::config::{SystemConfig, SystemSpec};
use crate::corpus::AnnotatedNote;
use crate::deid::{
    predictions_from_wire, read_predictions, AdapterConfig, DeidError, Deidentifier, ExternalAdapter, GoldLoopback,
    Prediction, RuleEngine, RuleSet, WireResponse,
};
use crate::Locale;

/// Reads predictions from files instead of running anything. The path may
/// contain `{locale}`; each file is read once.
pub struct PredictionFileSystem {
    name: String,
    path: String,
    cache: Mutex<HashMap<String, std::sync::Arc<Vec<WireResponse>>>>,
}

impl PredictionFileSystem {
    pub fn new(name: impl Into<String>, path: impl Into<String>) -> Self {
        PredictionFileSystem {
            name: name.into(),
            path: path.into(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn load(&self, locale: Locale) -> Result<std::sync::Arc<Vec<WireResponse>>, DeidError> {
        let path = self.path.replace("{locale}", locale.code());
        let mut cache = self.cache.lock().expect("cache lock");
        if let Some(v) = cache.get(&path) {
            return Ok(v.clone());
        }
        let f = File::open(&path).map_err(|e| DeidError::AdapterUnavailable(format!("{path}: {e}")))?;
        let (_, responses) = read_predictions(BufReader::new(f))?;
        let v = std::sync::Arc::new(responses);
        cache.insert(path, v.clone());
        Ok(v)
    }
}

impl Deidentifier for PredictionFileSystem {
    fn name(&self) -> &str {
        &self.name
    }

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        let mut out = Vec::with_capacity(notes.len());
        let mut i = 0;
        while i < notes.len() {
            let locale = notes[i].locale;
            let j = notes[i..].iter().position(|n| n.locale != locale).map_or(notes.len(), |k| i + k);
            let responses = self.load(locale)?;
            out.extend(predictions_from_wire(&notes[i..j], &responses)?.predictions);
            i = j;
        }
        Ok(out)
    }

    fn is_timed(&self) -> bool {
        false
    }
}

/// Stands in for a system that could not be constructed, so the failure is
/// recorded per system instead of aborting the suite.
pub struct FailedSystem {
    name: String,
    reason: String,
}

impl Deidentifier for FailedSystem {
    fn name(&self) -> &str {
        &self.name
    }

    fn deidentify(&self, _: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        Err(DeidError::AdapterUnavailable(self.reason.clone()))
    }
}

pub fn build_system(cfg: &SystemConfig) -> Result<Box<dyn Deidentifier>, DeidError> {
    build_spec(&cfg.name, &cfg.spec)
}

pub fn build_spec(name: &str, spec: &SystemSpec) -> Result<Box<dyn Deidentifier>, DeidError> {
    Ok(match spec {
        SystemSpec::Builtin { rules } => {
            let set = if rules == "default" {
                RuleSet::default_rules()?
            } else {
                let src = std::fs::read_to_string(rules)
                    .map_err(|e| DeidError::InvalidRules(format!("{rules}: {e}")))?;
                let pool = crate::surrogate::load_pool(Locale::EnUs)?;
                RuleSet::from_toml(&src, Some(&pool))?
            };
            Box::new(RuleEngine::new(name, set))
        }
        SystemSpec::Predictions { path } => Box::new(PredictionFileSystem::new(name, path.clone())),
        SystemSpec::Loopback => Box::new(Named(name.to_string(), GoldLoopback)),
        other => {
            let (kind, timeout_ms, batch_size) = other.adapter_kind().expect("adapter spec");
            let cfg = AdapterConfig {
                kind,
                timeout_ms,
                batch_size,
            };
            cfg.validate()?;
            Box::new(ExternalAdapter::new(name, cfg))
        }
    })
}

/// Builds every configured system; construction failures become
/// [`FailedSystem`]s.
pub fn build_systems(configs: &[SystemConfig]) -> Vec<Box<dyn Deidentifier>> {
    configs
        .iter()
        .map(|c| {
            build_system(c).unwrap_or_else(|e| {
                log::error!("system {} unavailable: {e}", c.name);
                Box::new(FailedSystem {
                    name: c.name.clone(),
                    reason: e.to_string(),
                }) as Box<dyn Deidentifier>
            })
        })
        .collect()
}

struct Named<D>(String, D);

impl<D: Deidentifier> Deidentifier for Named<D> {
    fn name(&self) -> &str {
        &self.0
    }

    fn deidentify(&self, notes: &[AnnotatedNote]) -> Result<Vec<Prediction>, DeidError> {
        self.1.deidentify(notes)
    }

    fn is_timed(&self) -> bool {
        self.1.is_timed()
    }
}
