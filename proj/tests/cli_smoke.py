"""End-to-end checks of positroid_lab: outputs, exit codes and determinism."""
import json
import os
import subprocess
import sys
import tempfile

LAB, DATA = sys.argv[1], sys.argv[2]
failures = []


def run(*args, env=None):
    e = dict(os.environ, **(env or {}))
    p = subprocess.run([LAB, *args], capture_output=True, text=True, env=e)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + ("" if cond else ": " + detail))
    if not cond:
        failures.append(name)


def data(name):
    return os.path.join(DATA, name)


def js(*args):
    code, out, err = run(*args, "--format", "json")
    return code, (json.loads(out) if code in (0, 1) else None), err


code, out, _ = js("cell", "--perm", "3,1,4,2", "--sample", "3")
check("cell perm", code == 0 and out["positroid"]["bases"] == ["12", "13", "14", "23", "24"] and len(out["samples"]) == 3,
      str(out))
code, out, _ = js("cell", "--graph", data("g1.json"), "--matchings")
check("cell graph matchings", code == 0 and out["matchings"]["count"] == 5 and out["perm"]["text"] == "(3,1,4,2)", str(out))
code, out, _ = js("cell", "--perm", "1")
check("cell single loop", code == 0 and out["dimension"] == 0, str(out))
code, out, _ = run("cell", "--perm", "(3,1,4,2)", "--format", "dot")
check("cell dot", code == 0 and out.startswith("// seed 0") and "graph" in out, out)
code, out, _ = run("cell", "--perm", "(3,1,4,2)", "--format", "tikz")
check("cell tikz", code == 0 and "tikzpicture" in out, out)

code, out, _ = js("--k", "1", "--n", "4", "tilings", "--space", "hypersimplex")
check("hypersimplex tilings", code == 0 and out["count"] == 2, str(out))
tiling_file = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
json.dump(out["tilings"][0], tiling_file)
tiling_file.close()
code, back, _ = js("tilings", "--verify", tiling_file.name)
check("enumerated tiling verifies", code == 0 and back["report"]["valid"], str(back))

code, out, _ = js("--k", "1", "--n", "4", "--z", "vandermonde:0,1,2,3", "tilings", "--space", "amplituhedron")
check("amplituhedron tilings", code == 0 and out["count"] == 2, str(out))
with open(tiling_file.name, "w") as f:
    json.dump(out["tilings"][1], f)
code, back, _ = js("--z", "vandermonde:0,1,2,3", "tilings", "--verify", tiling_file.name)
check("enumerated amplituhedron tiling verifies", code == 0 and back["report"]["valid"], str(back))
os.unlink(tiling_file.name)

code, out, _ = js("--k", "1", "--n", "4", "tilings", "--space", "hypersimplex", "--t-dual")
perms = sorted(t["perm"]["text"] for til in out["tilings"] for t in til["tiles"])
check("t-dual tilings", code == 0 and perms == ["(1_,3,4,2)", "(2,3,1,4_)", "(2,4,3_,1)", "(3,2_,4,1)"], str(perms))

code, out, _ = js("tilings", "--verify", data("tiling_hypersimplex_2_4.json"))
check("verify valid hypersimplex tiling", code == 0 and out["report"]["valid"], str(out))
code, out, _ = js("tilings", "--verify", data("tiling_hypersimplex_broken.json"))
check("verify broken tiling lists violations", code == 1 and not out["report"]["valid"] and len(out["report"]["violations"]) > 0, str(out))
code, out, _ = js("--z", "vandermonde:0,1,2,3", "tilings", "--verify", data("tiling_amplituhedron_overlap.json"))
check("verify overlapping amplituhedron tiling", code == 1 and len(out["report"]["violations"]) > 0, str(out))

code, out, _ = js("--k", "2", "--n", "4", "trop", "--values", "1,0,0,0,0,0")
check("trop two pyramids", code == 0 and len(out["subdivision"]["cells"]) == 2, str(out))
code, out, _ = js("--k", "2", "--n", "4", "trop", "--values", "0,0,0,0,0,0")
check("trop zero heights", code == 0 and len(out["subdivision"]["cells"]) == 1, str(out))
code, text, _ = run("trop", "--heights", data("heights_not_positive.json"), "--format", "text")
check("trop not positive", code == 1 and "not positive-tropical (S=" in text and "a,b,c,d=" in text, text)
code, out, _ = js("trop", "--heights", data("heights_pyramids.json"))
check("trop heights file", code == 0 and len(out["subdivision"]["cells"]) == 2, str(out))

code, out, _ = js("--n", "5", "--k", "1", "--m", "2", "amp", "sample", "--cell", "(2,3,1,4,5_)", "--count", "100")
check("amp sample", code == 0 and len(out["samples"]) == 100, str(out)[:300])
code, out, _ = js("--z", "vandermonde:0,1,2,3,4", "amp", "verify-tiling", "--file", data("tiling_amplituhedron_1_5.json"))
check("amp verify-tiling", code == 0 and out["report"]["valid"], str(out)[:300])

code, out, _ = js("cluster", "--file", data("nine_gon.json"), "--mutate", "3,7")
check("cluster seed", code == 0 and len(out["seed_quiver"]["vertices"]) == 10, str(out)[:300])

args = ["--seed", "17", "--n", "5", "--k", "1", "--m", "2", "amp", "sample", "--count", "40", "--format", "json"]
a = run(*args, env={"POSITROID_LAB_THREADS": "1"})
b = run(*args, env={"POSITROID_LAB_THREADS": "3"})
c = run(*args[:1], "18", *args[2:])
check("seeded runs are bit-identical", a == b and a[0] == 0, "")
check("seed is recorded", json.loads(a[1])["seed"] == 17 and a[1] != c[1], "")
code, text, _ = run("--seed", "5", "cell", "--perm", "3,1,4,2", "--sample", "2", "--format", "text")
check("text output records the seed", text.startswith("seed 5\n"), text)

with tempfile.TemporaryDirectory() as d:
    bad = os.path.join(d, "bad.json")
    with open(bad, "w") as f:
        f.write('{\n  "space": "hypersimplex",\n  "k": 1,\n  "n": 4,\n  "tiles": [\n    {"perm": "3,1,4"}\n  ]\n}\n')
    code, _, err = run("tilings", "--verify", bad)
    check("bad permutation is an input error on its line", code == 2 and bad + ":6:" in err, err)
    with open(bad, "w") as f:
        f.write('{\n  "n": 4,\n  "triangles": [\n    {"vertices": [1, 2, 3], "color": "black"},\n'
                '    {"vertices": [1, 3], "color": "white"}\n  ]\n}\n')
    code, _, err = run("cluster", "--file", bad)
    check("short triangle is an input error on its line", code == 2 and bad + ":5:" in err, err)
    with open(bad, "w") as f:
        f.write('{\n  "k": 2,\n  "n": 4,\n  "coords": {\n    "1,2": 0,\n    "1,5": 1\n  }\n}\n')
    code, _, err = run("trop", "--heights", bad)
    check("bad height key is an input error on its line", code == 2 and bad + ":6:" in err, err)
code, _, err = run("cell", "--perm", "3,1,5,2")
check("bad flag value exits 2", code == 2 and "--perm" in err, err)
code, _, err = run("--z", "vandermonde:0,1,1,3", "--k", "1", "--n", "4", "tilings", "--space", "amplituhedron")
check("bad Z exits 2", code == 2 and "--z" in err, err)
code, _, _ = run("nonsense")
check("unknown command exits 2", code == 2)

sys.exit(1 if failures else 0)
