"""Generate the planted duplicate corpus for merge tests.

20 template uses, each in 3 close paraphrases (60 uses total, one synthetic
incident id each). Verifies with the fallback embedder that every
intra-template cosine clears the default merge threshold with margin and
every inter-template cosine stays safely below it, then writes the fixture.
"""

import itertools
import json
from pathlib import Path

import numpy as np

from atlas_forge.ingest import DEFAULT_MERGE_THRESHOLD, merge_text
from atlas_forge.layout.embedding import fallback_embed
from atlas_forge.model import make_use

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "planted_corpus_60.json"

TEMPLATES = [
    ("Operating autonomous delivery vehicles", "Sensor fusion for navigation", "Logistics providers", "Road users", "Public and private transportation"),
    ("Recommending suitable videos for children", "Content filtering", "Video platforms", "Children", "Recommender systems"),
    ("Detecting fraudulent card payments", "Transaction anomaly scoring", "Banks", "Customers", "Finance"),
    ("Diagnosing skin conditions from photos", "Image classification", "Hospitals", "Patients", "Healthcare"),
    ("Screening job applications", "Resume ranking", "Employers", "Job applicants", "Employment and recruiting"),
    ("Predicting crop irrigation needs", "Soil moisture forecasting", "Farm cooperatives", "Farmers", "Agriculture"),
    ("Grading student essays", "Natural language scoring", "Universities", "Students", "Education"),
    ("Monitoring power grid load", "Demand forecasting", "Utility companies", "Households", "Energy"),
    ("Translating customer support chats", "Neural machine translation", "Retail chains", "Shoppers", "Customer service"),
    ("Flagging abusive social media posts", "Toxicity detection", "Media platforms", "The general public", "Social media"),
    ("Scheduling hospital operating rooms", "Constraint optimization", "Clinics", "Medical staff", "Hospital administration"),
    ("Forecasting urban traffic congestion", "Flow simulation", "City councils", "Commuters", "Smart cities"),
    ("Inspecting welds on assembly lines", "Defect detection", "Manufacturers", "Assembly workers", "Manufacturing"),
    ("Pricing motor insurance premiums", "Actuarial risk modeling", "Insurers", "Drivers", "Insurance"),
    ("Curating personalized news digests", "Interest profiling", "News publishers", "Readers", "Journalism"),
    ("Guiding warehouse picking robots", "Path planning", "E-commerce fulfillment centers", "Warehouse staff", "Logistics"),
    ("Verifying travelers at border gates", "Document and face matching", "Border agencies", "Travelers", "Border control management"),
    ("Estimating building energy efficiency", "Thermal imaging analysis", "Property assessors", "Building owners", "Real estate"),
    ("Matching players of similar skill", "Behavioral rating", "Game studios", "Players", "Gaming"),
    ("Tracking endangered species populations", "Acoustic monitoring", "Conservation agencies", "Wildlife", "Environmental monitoring"),
]

# light-touch paraphrases: tiny suffix edits on one component each, so the
# three variants of a template stay close in 3-gram space
def _variants(purpose: str, capability: str) -> list[tuple[str, str]]:
    return [
        (purpose, capability),
        (purpose, capability + " system"),
        (purpose + " daily", capability),
    ]


def build_uses():
    uses = []
    incident = 1
    for t_index, (purpose, capability, ai_user, ai_subject, domain) in enumerate(TEMPLATES):
        for v_purpose, v_capability in _variants(purpose, capability):
            use = make_use(
                purpose=v_purpose,
                capability=v_capability,
                ai_user=ai_user,
                ai_subject=ai_subject,
                domain=domain,
                short_description=f"{v_capability.lower()} for {v_purpose.lower()}",
                daily=False,
                source_incident_ids=frozenset({incident}),
            )
            uses.append((t_index, incident, use))
            incident += 1
    return uses


def main() -> None:
    tagged = build_uses()
    vectors = np.stack([fallback_embed(merge_text(u)) for _, _, u in tagged])
    sims = vectors @ vectors.T

    # single linkage merges connected components, so each template only needs
    # its base variant linked to the other two; cross-template pairs must all
    # stay below the threshold
    chain = [
        min(sims[3 * t, 3 * t + 1], sims[3 * t, 3 * t + 2]) for t in range(len(TEMPLATES))
    ]
    inter = [
        sims[i, j]
        for (i, (ti, _, _)), (j, (tj, _, _)) in itertools.combinations(enumerate(tagged), 2)
        if ti != tj
    ]
    print(f"intra-template chain cosine: min {min(chain):.4f}")
    print(f"inter-template cosine: max {max(inter):.4f}")
    print(f"threshold: {DEFAULT_MERGE_THRESHOLD}")
    assert min(chain) > DEFAULT_MERGE_THRESHOLD + 0.01, "chain pairs must clear the threshold with margin"
    assert max(inter) < DEFAULT_MERGE_THRESHOLD - 0.02, "inter-template pairs must stay below it"

    payload = {
        "threshold": DEFAULT_MERGE_THRESHOLD,
        "expected_clusters": len(TEMPLATES),
        "uses": [
            {
                "template": ti,
                "incident_id": inc,
                "purpose": u.purpose,
                "capability": u.capability,
                "ai_user": u.ai_user,
                "ai_subject": u.ai_subject,
                "domain": u.domain,
                "short_description": u.short_description,
            }
            for ti, inc, u in tagged
        ],
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(payload, indent=1) + "\n")
    print(f"wrote {OUT} ({len(tagged)} uses, {len(TEMPLATES)} templates)")


if __name__ == "__main__":
    main()
