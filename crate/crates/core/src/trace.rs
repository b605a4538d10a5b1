//! JSON traces of a construction: the step log with every coordinate written
//! as an exact decimal string, the named outputs and the certificate.

use std::collections::BTreeMap;

use rug::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{ObjRef, Op, PointId, Ratio, Scene};
use crate::precision::{fmt_exact, PrecisionContext};
use crate::recipes::Certificate;

pub const TRACE_VERSION: &str = "lemniscate-trace/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub version: String,
    pub precision: u32,
    pub recipe: String,
    pub steps: Vec<TraceStep>,
    /// Output name to point reference (`P12`).
    pub outputs: BTreeMap<String, String>,
    pub certificate: Vec<TraceCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub op: String,
    /// Coordinates of `given` (as `p/q`) and `input` (as decimals) steps.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub args: Vec<String>,
    pub inputs: Vec<String>,
    pub outputs: Vec<TraceObject>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub context: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceObject {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCheck {
    pub check: String,
    pub target: String,
    pub error: String,
}

impl TraceDocument {
    pub fn from_scene(
        scene: &Scene,
        recipe: &str,
        outputs: &BTreeMap<String, PointId>,
        certificate: &Certificate,
    ) -> TraceDocument {
        let steps = scene
            .steps()
            .iter()
            .map(|step| {
                let args = match &step.op {
                    Op::Given { x, y } => vec![x.to_string(), y.to_string()],
                    Op::Input { x, y } => vec![fmt_exact(x), fmt_exact(y)],
                    _ => Vec::new(),
                };
                let outputs = step
                    .outputs
                    .iter()
                    .map(|obj| match obj {
                        ObjRef::Point(p) => {
                            let pt = scene.point(*p);
                            TraceObject {
                                id: obj.to_string(),
                                x: Some(fmt_exact(&pt.x)),
                                y: Some(fmt_exact(&pt.y)),
                                label: pt.label.clone(),
                            }
                        }
                        _ => TraceObject { id: obj.to_string(), x: None, y: None, label: None },
                    })
                    .collect();
                TraceStep {
                    op: step.op.name().to_string(),
                    args,
                    inputs: step.inputs.iter().map(ObjRef::to_string).collect(),
                    outputs,
                    context: step.context.clone(),
                }
            })
            .collect();
        TraceDocument {
            version: TRACE_VERSION.to_string(),
            precision: scene.ctx().digits(),
            recipe: recipe.to_string(),
            steps,
            outputs: outputs.iter().map(|(k, v)| (k.clone(), ObjRef::Point(*v).to_string())).collect(),
            certificate: certificate
                .entries
                .iter()
                .map(|e| TraceCheck { check: e.check.clone(), target: fmt_exact(&e.target), error: fmt_exact(&e.error) })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("trace documents always serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<TraceDocument> {
        let doc: TraceDocument = serde_json::from_str(text).map_err(|e| Error::Trace(e.to_string()))?;
        if doc.version != TRACE_VERSION {
            return Err(Error::Trace(format!("unsupported trace version {:?}", doc.version)));
        }
        Ok(doc)
    }

    /// Re-executes the steps in a fresh scene and checks that every point
    /// lands exactly on the recorded coordinates.
    pub fn replay(&self) -> Result<Scene> {
        let ctx = PrecisionContext::new(self.precision)?;
        let mut scene = Scene::new(&ctx);
        for (k, step) in self.steps.iter().enumerate() {
            let op = parse_op(step, &ctx).map_err(|e| Error::Trace(format!("step {k}: {e}")))?;
            let inputs = step.inputs.iter().map(|s| s.parse()).collect::<Result<Vec<ObjRef>>>()?;
            let produced = scene.scoped(&step.context, |s| s.apply(&op, &inputs))?;
            if produced.len() != step.outputs.len() {
                return Err(Error::Trace(format!(
                    "step {k} produced {} objects, trace records {}",
                    produced.len(),
                    step.outputs.len()
                )));
            }
            for (obj, recorded) in produced.iter().zip(&step.outputs) {
                if obj.to_string() != recorded.id {
                    return Err(Error::Trace(format!("step {k} produced {obj}, trace records {}", recorded.id)));
                }
                if let ObjRef::Point(p) = obj {
                    let pt = scene.point(*p);
                    let same = |got: &Float, want: &Option<String>| want.as_deref() == Some(fmt_exact(got).as_str());
                    if !same(&pt.x, &recorded.x) || !same(&pt.y, &recorded.y) {
                        return Err(Error::Trace(format!("step {k}: {obj} does not reproduce its recorded coordinates")));
                    }
                    if let Some(label) = &recorded.label {
                        scene.label(*p, label);
                    }
                }
            }
        }
        Ok(scene)
    }
}

fn parse_op(step: &TraceStep, ctx: &PrecisionContext) -> Result<Op> {
    let arg = |k: usize| {
        step.args.get(k).ok_or_else(|| Error::Trace(format!("{} step is missing coordinate {k}", step.op)))
    };
    Ok(match step.op.as_str() {
        "given" => Op::Given { x: arg(0)?.parse::<Ratio>()?, y: arg(1)?.parse::<Ratio>()? },
        "input" => Op::Input { x: ctx.parse(arg(0)?)?, y: ctx.parse(arg(1)?)? },
        "line" => Op::LineThrough,
        "circle" => Op::CircleAbout,
        "intersect" => Op::Intersect,
        other => return Err(Error::Trace(format!("unknown operation {other:?}"))),
    })
}
