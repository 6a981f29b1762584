"""Exit-code and determinism checks for the mfc binary."""
import subprocess
import sys

MFC, DATA = sys.argv[1], sys.argv[2]


def run(*args):
    p = subprocess.run([MFC, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def f(name):
    return f"{DATA}/{name}"


CASES = [
    (0, ["analyze", f("K1.sc")], ["MF-complex: yes", "shifted(identity): yes", "MF(K): (3,4) (1,2,3) (1,2,4)"]),
    (0, ["analyze", f("K2.sc")], ["MF-complex: no (witness face (1,4))"]),
    (0, ["analyze", f("K3.sc")], ["MF-complex: yes", "shifted(any): no"]),
    (0, ["analyze", f("K1.json")], ["MF(K): (3,4) (1,2,3) (1,2,4)"]),
    (0, ["decompose", f("K1.sc"), "--target", "cp"], ["Z_K ≃ S^3 ∨ 2S^5 ∨ 2S^6", "[w~(1,2,3),a~4]"]),
    (1, ["decompose", f("skel_4_2.sc"), "--target", "cp"], ["FLAG dim 6: enumeration=4 series=4 porter=3"]),
    (0, ["decompose", f("tri.sc"), "--target", "spheres", "--dims", "1,1,1", "--max-dim", "8",
         "--convention", "polynomial-all"], ["S^5 ∨ 3S^6 ∨ 6S^7 ∨ 10S^8 (truncated)"]),
    (1, ["decompose", f("tri.sc"), "--target", "spheres", "--dims", "1,1,1", "--max-dim", "8"],
     ["S^5 ∨ 3S^6 ∨ 6S^7 ∨ 10S^8 (truncated)", "FLAG dim 7"]),
    (0, ["loop-homology", f("K1.sc"), "--max-degree", "6"],
     ["graded dimensions (d <= 6): 1 4 7 8 10 18 32", "kernel generators g = t^2 + 2t^4 + 2t^5"]),
    (0, ["loop-homology", f("full4.sc")], ["graded dimensions (d <= 10): 1 4 6 4 1 0 0 0 0 0 0"]),
    (0, ["allday", "--dims", "2,2,2", "--max-degree", "14", "--check-bubenik"],
     ["d^2=0: ok", "homology == Bubenik closed form: ok"]),
    (0, ["allday", "--dims", "1,1", "--max-degree", "10"], ["homology (d <= 10): 1 2 4 8 16 32 64 128 256 512 1024"]),
    (1, ["allday", "--dims", "1,1,1", "--max-degree", "6", "--check-bubenik"], ["MISMATCH at degree 2"]),
    (0, ["allday", "--dims", "1,1,1", "--max-degree", "6", "--check-bubenik", "--convention", "polynomial-all"],
     ["homology == Bubenik closed form: ok"]),
    (1, ["allday", "--dims", "1,1,1", "--max-degree", "14", "--budget-words", "100"], []),
    (0, ["porter", "4", "2"], ["F^4_2 ≃ 4S^5 ∨ 3S^6"]),
    (0, ["porter", "3", "1"], ["F^3_1 ≃ S^5"]),
    (1, ["check", f("skel_4_2.sc"), "--max-dim", "8"], ["MISMATCH"]),
    (0, ["check", f("K1.sc"), "--max-dim", "8"], []),
    (2, ["analyze", f("bad_syntax.sc")], []),
    (2, ["analyze", f("bad_range.sc")], []),
    (2, ["analyze", f("missing.sc")], []),
    (2, ["analyze"], []),
    (2, ["frobnicate"], []),
    (2, ["decompose", f("K1.sc"), "--target", "torus"], []),
    (2, ["loop-homology", f("K1.sc"), "--max-degree", "x"], []),
    (3, ["decompose", f("K2.sc")], []),
    (3, ["loop-homology", f("K2.sc")], []),
    (3, ["decompose", f("K1.sc"), "--target", "spheres", "--dims", "1,1", "--max-dim", "8"], []),
    (3, ["decompose", f("K1.sc"), "--target", "spheres", "--dims", "1,1,1,1"], []),
    (3, ["porter", "4", "4"], []),
    (3, ["allday", "--dims", "1"], []),
]

failures = 0
for expected, args, needles in CASES:
    code, out, err = run(*args)
    problems = []
    if code != expected:
        problems.append(f"exit {code}, expected {expected}")
    for n in needles:
        if n not in out:
            problems.append(f"missing {n!r}")
    if expected in (2, 3) and not err.strip():
        problems.append("no message on stderr")
    if problems:
        failures += 1
        print("FAIL", " ".join(args), "|", "; ".join(problems))
        print(out, err)
    else:
        print("ok  ", " ".join(args))

for args in (["decompose", f("K3.sc"), "--json"], ["loop-homology", f("K1.sc")], ["check", f("tri.sc")]):
    a, b = run(*args), run(*args)
    if a != b:
        failures += 1
        print("FAIL nondeterministic:", " ".join(args))
    else:
        print("ok   deterministic:", " ".join(args))

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
