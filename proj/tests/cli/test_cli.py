#!/usr/bin/env python3
"""End-to-end checks of the mac command line: outputs, schemas, exit codes.

usage: test_cli.py <path to mac> <schema directory>
"""

import json
import os
import subprocess
import sys
import unittest
from pathlib import Path

import jsonschema

MAC = ""
SCHEMAS = Path()

C4 = '{"n":4,"facets":[[1,2],[2,3],[3,4],[1,4]]}'
OCTAHEDRON = '{"n":6,"facets":[[1,3,5],[1,3,6],[1,4,5],[1,4,6],[2,3,5],[2,3,6],[2,4,5],[2,4,6]]}'

SCHEMA_OF = {
    "classify": "classify",
    "nonfaces": "nonfaces",
    "betti": "betti",
    "oracle-betti": "oracle_betti",
    "ring": "ring",
    "loop-ranks": "loop_ranks",
    "crosscheck": "crosscheck",
    "generate": "complex",
}


def run(*args, env=None, stdin=None):
    return subprocess.run([MAC, *args], capture_output=True, text=True, env=env, input=stdin, timeout=120)


def report(command, *args, **kwargs):
    proc = run(command, *args, **kwargs)
    if proc.returncode != 0:
        raise AssertionError(f"mac {command} exited {proc.returncode}: {proc.stderr}")
    doc = json.loads(proc.stdout)
    schema = json.loads((SCHEMAS / f"{SCHEMA_OF[command]}.schema.json").read_text())
    jsonschema.validate(doc, schema)
    return doc


def generated(family, size, seed=0):
    return json.dumps(report("generate", family, str(size), "--seed", str(seed)))


class Classify(unittest.TestCase):
    def test_square_is_product_of_two_spheres(self):
        self.assertEqual(report("classify", "-i", C4), {"kind": "elliptic", "spheres": [3, 3], "disk": 0})

    def test_pentagon_is_hyperbolic(self):
        doc = report("classify", "-i", generated("cycle", 5))
        self.assertEqual(doc["kind"], "hyperbolic")
        self.assertEqual(doc["witness_I"], [1, 3, 4])
        self.assertEqual(doc["witness_nonfaces"], [[1, 3], [1, 4]])

    def test_octahedron(self):
        self.assertEqual(report("classify", "-i", OCTAHEDRON)["spheres"], [3, 3, 3])

    def test_simplex_and_boundary(self):
        self.assertEqual(report("classify", "-i", generated("simplex", 2)), {"kind": "elliptic", "spheres": [], "disk": 6})
        self.assertEqual(report("classify", "-i", generated("boundary", 3))["spheres"], [7])


class Reports(unittest.TestCase):
    def test_every_command_validates_on_a_corpus(self):
        corpus = [C4, OCTAHEDRON, generated("cycle", 5), generated("cycle", 6), generated("simplex", 3)]
        corpus += [generated("random", n, seed) for n in (3, 5, 6) for seed in range(3)]
        for k in corpus:
            for command in ("classify", "nonfaces", "betti", "oracle-betti", "ring", "crosscheck"):
                report(command, "-i", k)
            report("loop-ranks", "-i", k, "-N", "16")

    def test_betti_numbers(self):
        self.assertEqual(report("betti", "-i", C4)["betti"], [1, 0, 0, 2, 0, 0, 1])
        c5 = generated("cycle", 5)
        self.assertEqual(report("betti", "-i", c5)["betti"], [1, 0, 0, 5, 5, 0, 0, 1])
        self.assertEqual(report("oracle-betti", "-i", c5)["betti"], [1, 0, 0, 5, 5, 0, 0, 1])
        self.assertEqual(report("oracle-betti", "-i", C4)["cells"], 64)
        self.assertTrue(report("crosscheck", "-i", c5)["equal"])

    def test_ring(self):
        c4 = report("ring", "-i", C4)
        self.assertFalse(c4["trivial"])
        self.assertEqual(c4["certificate"]["product"]["degree"], 6)
        # Three points: the non-faces {1,2}, {1,3}, {2,3} pairwise intersect.
        self.assertTrue(report("ring", "-i", '{"n":3,"facets":[[1],[2],[3]]}')["trivial"])

    def test_nonfaces(self):
        doc = report("nonfaces", "-i", C4)
        self.assertEqual(doc["members"], [[1, 3], [2, 4]])
        self.assertEqual(len(doc["components"]), 2)

    def test_loop_ranks(self):
        doc = report("loop-ranks", "-i", generated("cycle", 5), "-N", "24")
        self.assertEqual(doc["model"], {"kind": "wedge", "dims": [3, 3, 4]})
        self.assertEqual(doc["verdict"], "exponential")
        self.assertGreater(doc["ratio"], 1.05)
        self.assertEqual(doc["truncation"], 24)
        elliptic = report("loop-ranks", "-i", C4)
        self.assertEqual(elliptic["verdict"], "finite")
        self.assertNotIn("ratio", elliptic)
        self.assertEqual(elliptic["ranks"][:3], [0, 2, 0])

    def test_generate(self):
        self.assertEqual(json.loads(generated("cycle", 4)), {"n": 4, "facets": [[1, 2], [2, 3], [1, 4], [3, 4]]})
        self.assertEqual(generated("random", 7, 11), generated("random", 7, 11))

    def test_stdin_and_file_input(self):
        self.assertEqual(report("classify", stdin=C4), report("classify", "-i", C4))
        path = Path(os.environ.get("TMPDIR", "/tmp")) / f"mac_cli_{os.getpid()}.json"
        path.write_text(C4)
        try:
            self.assertEqual(report("classify", "-i", str(path)), report("classify", "-i", C4))
        finally:
            path.unlink()


class Errors(unittest.TestCase):
    def assert_fails(self, args, code, *fragments):
        proc = run(*args)
        self.assertEqual(proc.returncode, code, proc.stderr)
        self.assertEqual(proc.stdout, "")
        for fragment in fragments:
            self.assertIn(fragment, proc.stderr)

    def test_ghost_vertex(self):
        self.assert_fails(["classify", "-i", '{"n":3,"facets":[[1,2]]}'], 2, "ghost vertex", "vertex 3")

    def test_vertex_out_of_range(self):
        self.assert_fails(["betti", "-i", '{"n":3,"facets":[[1,2],[2,5]]}'], 2, "facet 2", "vertex 5")

    def test_malformed_input(self):
        self.assert_fails(["classify", "-i", "{oops"], 2, "input error")
        self.assert_fails(["classify", "-i", "/nonexistent/k.json"], 2, "cannot open")
        self.assert_fails(["generate", "torus", "3"], 2, "torus")
        self.assert_fails(["loop-ranks", "-i", C4, "-N", "4"], 2, "truncation")

    def test_resource_limits(self):
        c5 = generated("cycle", 5)
        self.assert_fails(["oracle-betti", "-i", c5, "--limit-cells", "10"], 3, "resource limit")
        self.assert_fails(["betti", "-i", c5, "--limit-n", "3"], 3, "resource limit")


class Behaviour(unittest.TestCase):
    def test_deterministic_output(self):
        k = generated("random", 7, 3)
        for command in ("nonfaces", "betti", "ring", "loop-ranks", "crosscheck"):
            first = run(command, "-i", k).stdout
            self.assertEqual(first, run(command, "-i", k).stdout, command)

    def test_thread_count_does_not_change_results(self):
        k = generated("random", 7, 8)
        outputs = set()
        for threads in ("1", "2", "4"):
            env = dict(os.environ, MAC_THREADS=threads)
            outputs.add(run("crosscheck", "-i", k, env=env).stdout + run("betti", "-i", k, env=env).stdout)
        self.assertEqual(len(outputs), 1)

    def test_text_format(self):
        self.assertEqual(run("classify", "--format", "text", "-i", C4).stdout, "elliptic: Z(K) ≅ S^3 × S^3\n")
        text = run("classify", "--format", "text", "-i", generated("cycle", 5)).stdout
        self.assertEqual(text, "hyperbolic: witness I = {1,3,4}, M_I = {1,3} {1,4}\n")
        betti = run("betti", "--format", "text", "-i", C4).stdout
        self.assertIn("Poincaré polynomial: 1 + 2·t^3 + t^6", betti)
        self.assertIn("growth: exponential", run("loop-ranks", "--format", "text", "-i", generated("cycle", 5)).stdout)


if __name__ == "__main__":
    if len(sys.argv) < 3:
        sys.exit(__doc__)
    MAC = sys.argv[1]
    SCHEMAS = Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
