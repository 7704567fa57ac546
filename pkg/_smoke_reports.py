import sys, json, time
sys.path.insert(0, "src")
from prigid.reports import compute_report, canonical_json, reverify, load_report
from prigid.errors import VerificationError

CASES = [
    ("group.series", {"descriptor": "theta(3,1,1,3)"}),
    ("group.dimension", {"descriptor": "theta(3,1,1,3)", "nmax": 10}),
    ("group.powerful", {"descriptor": "ut(4,3,1)"}),
    ("group.theoremA", {"descriptor": "theta(3,1,1,3)"}),
    ("group.jmodule", {"descriptor": "ut(4,3,1)"}),
    ("group.maximal", {"descriptor": "theta(3,1,1,3)"}),
    ("group.tower", {"p": 3, "k": 1, "n": 3}),
    ("rigidity.check", {"descriptor": "laurent(7)", "p": 3}),
    ("rigidity.check", {"descriptor": "ratfunc(7)", "p": 3}),
    ("rigidity.element", {"descriptor": "laurent(7)", "p": 3, "a": "t"}),
    ("rigidity.hereditary", {"descriptor": "laurent(7)", "p": 3, "depth": 2}),
    ("rigidity.steinberg", {"descriptor": "ratfunc(7)", "p": 3}),
    ("tower", {"descriptor": "laurent(7)", "p": 3, "n": 3}),
    ("witness", {"descriptor": "ratfunc(7)", "p": 3}),
    ("solve", {"descriptor": "laurent(7,64)", "p": 3, "poly": "x^3-(1+t)", "solve_prec": 3}),
    ("solve", {"descriptor": "laurent(7,64)", "p": 3, "poly": "x^9-t", "solve_prec": 4}),
]

for kind, inputs in CASES:
    t0 = time.time()
    rep = compute_report(kind, inputs)
    txt = canonical_json(rep)
    # byte stability
    rep2 = compute_report(kind, inputs)
    assert canonical_json(rep2) == txt, f"{kind}: not byte-stable"
    # round-trip through disk then reverify
    with open("/tmp/_rep.json", "w") as fh:
        fh.write(txt)
    back = load_report("/tmp/_rep.json")
    out = reverify(back)
    assert out["reverified"], kind
    print(f"OK {kind} {inputs} {time.time()-t0:.2f}s checks={out['checks']} bytes={len(txt)}")

# tamper checks: flip a value inside a witness-carrying report, expect failure
rep = compute_report("rigidity.steinberg", {"descriptor": "ratfunc(7)", "p": 3})
bad = json.loads(canonical_json(rep))
bad["body"]["b"] = "t+1"
try:
    reverify(bad)
    print("TAMPER steinberg: NOT CAUGHT (bug)")
except VerificationError as e:
    print(f"TAMPER steinberg caught: {e}")

rep = compute_report("witness", {"descriptor": "ratfunc(7)", "p": 3})
bad = json.loads(canonical_json(rep))
bad["body"]["certificate"]["v_beta"] = 3
bad["body"]["certificate"]["v_beta_mod_p"] = 0
try:
    reverify(bad)
    print("TAMPER certificate: NOT CAUGHT (bug)")
except VerificationError as e:
    print(f"TAMPER certificate caught: {e}")

rep = compute_report("group.powerful", {"descriptor": "ut(4,3,1)"})
bad = json.loads(canonical_json(rep))
bad["body"]["powerful"]["witness_element"] = "u(0,0,0,0,0,1)"
try:
    reverify(bad)
    print("TAMPER group witness: NOT CAUGHT (bug)")
except VerificationError as e:
    print(f"TAMPER group witness caught: {e}")

rep = compute_report("group.series", {"descriptor": "theta(3,1,1,3)"})
bad = json.loads(canonical_json(rep))
bad["body"]["order"] = 728
try:
    reverify(bad)
    print("TAMPER recompute: NOT CAUGHT (bug)")
except VerificationError as e:
    print(f"TAMPER recompute caught: {e}")
print("smoke done")
