"""Random Java source generator that also reports the expected tokens.

Each generated statement carries the canonical token texts the extractor
must produce for it, derived from the generator's own construction, so
whole files can be checked token-for-token.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

NOISE = [
    "// if (x) { foo(); } else { bar(); }",
    "/* while (true) { } */",
    "/* } } } */",
    "// return; break; throw",
]

# (statement text, expected tokens); receivers resolve through the fields
# and locals declared by the generator
SIMPLE = [
    ('log.debug("if { x }");', ["Logger.debug"]),
    ("log.warn(describe(name));", ["Logger.warn", "describe"]),
    ("items.add(name.trim());", ["List<String>.add", "String.trim"]),
    ("Helper.check(nums);", ["Helper.check"]),
    ("this.log.info(\"x\");", ["Logger.info"]),
    ("build().run();", ["build", "run"]),
    ("super.reset();", ["reset"]),
    ("addParameter(\"k\", v);", ["addParameter"]),
    ("int w = compute(a) + other();", ["compute", "other"]),
    ("Thing t = new Thing(make());", ["make"]),
    ('String s = "while (true) { return; }";', []),
    ("char c = '{';", []),
    ("int[] arr = {f(1), g(2)};", ["f", "g"]),
    ("items.forEach(x -> consume(x));", ["List<String>.forEach", "consume"]),
    ("((Helper) obj).check();", ["check"]),
    ("cache.get(name).add(1);", ["Map<String,List<Integer>>.get", "add"]),
    ("Collections.<String>emptyList();", ["Collections.emptyList"]),
    ("counter++;", []),
    ("v = a > b ? first() : second();", ["first", "second"]),
    ("sb.append(\"}\").append('{');", ["StringBuilder.append", "append"]),
]

CONDITIONS = [
    ("a > 0", []),
    ("check(a)", ["check"]),
    ("name.isEmpty()", ["String.isEmpty"]),
    ("it.hasNext()", ["Iterator<String>.hasNext"]),
    ("Helper.ok(a, b) && !done", ["Helper.ok"]),
]


@dataclass
class GeneratedFile:
    path: str
    text: str
    # method id -> expected canonical token texts
    expected: dict[str, list[str]] = field(default_factory=dict)
    lambda_bodies: int = 0


class JavaGen:
    def __init__(self, rng: random.Random) -> None:
        self.rng = rng

    # formatting helpers ------------------------------------------------

    def open_brace(self) -> str:
        return self.rng.choice([" {", " {", "\n{"])

    def maybe_noise(self, out: list[str]) -> None:
        if self.rng.random() < 0.15:
            out.append(self.rng.choice(NOISE))

    # statements ----------------------------------------------------------

    def block(self, depth: int, count: int | None = None) -> tuple[list[str], list[str]]:
        lines: list[str] = []
        toks: list[str] = []
        for _ in range(count if count is not None else self.rng.randint(0, 3)):
            self.maybe_noise(lines)
            s_lines, s_toks = self.statement(depth)
            lines += s_lines
            toks += s_toks
        return lines, toks

    def body(self, depth: int, header: str) -> tuple[list[str], list[str]]:
        """Control body, braced or (sometimes) braceless; tokens include the close."""
        if self.rng.random() < 0.25:
            # braceless; a nested if here would capture a following else
            s_lines, s_toks = self.statement(depth + 1, simple_only=True)
            if self.rng.random() < 0.3:
                cond, ctoks = self.condition()
                s_lines = [f"while ({cond})"] + ["    " + ln for ln in s_lines]
                s_toks = ctoks + ["while{"] + s_toks + ["}"]
            return [header] + ["    " + ln for ln in s_lines], s_toks + ["}"]
        inner, toks = self.block(depth + 1)
        return [header + self.open_brace()] + ["    " + ln for ln in inner] + ["}"], toks + ["}"]

    def condition(self) -> tuple[str, list[str]]:
        return self.rng.choice(CONDITIONS)

    def statement(self, depth: int, simple_only: bool = False) -> tuple[list[str], list[str]]:
        rng = self.rng
        if simple_only or depth >= 3 or rng.random() < 0.45:
            kind = rng.random()
            if kind < 0.06:
                return ["return compute(a);"], ["return", "compute"]
            if kind < 0.09:
                return ['throw new IllegalStateException(describe("x"));'], ["throw", "describe"]
            if kind < 0.12:
                return self._jump()
            text, toks = rng.choice(SIMPLE)
            return [text], list(toks)
        kind = rng.choice(["if", "ifelse", "elseif", "for", "foreach", "while", "do", "switch", "try", "sync", "anon", "lambda", "block"])
        cond, ctoks = self.condition()
        if kind == "if":
            lines, toks = self.body(depth, f"if ({cond})")
            return lines, ctoks + ["if{"] + toks
        if kind == "ifelse":
            l1, t1 = self.body(depth, f"if ({cond})")
            l2, t2 = self.body(depth, "else")
            return l1 + l2, ctoks + ["if{"] + t1 + ["else{"] + t2
        if kind == "elseif":
            c2, c2toks = self.condition()
            l1, t1 = self.body(depth, f"if ({cond})")
            l2, t2 = self.body(depth, f"else if ({c2})")
            l3, t3 = self.body(depth, "else")
            return l1 + l2 + l3, ctoks + ["if{"] + t1 + c2toks + ["else if{"] + t2 + ["else{"] + t3
        if kind == "for":
            lines, toks = self.body(depth, "for (int i = start(); i < n; i = next(i))")
            return lines, ["start", "next", "for{"] + toks
        if kind == "foreach":
            lines, toks = self.body(depth, "for (final String each : items)")
            return lines, ["for{"] + toks
        if kind == "while":
            lines, toks = self.body(depth, f"while ({cond})")
            return lines, ctoks + ["while{"] + toks
        if kind == "do":
            inner, toks = self.block(depth + 1)
            return ["do {"] + ["    " + ln for ln in inner] + [f"}} while ({cond});"], ["do{"] + toks + ["}"] + ctoks
        if kind == "switch":
            lines = ["switch (key()) {"]
            toks = ["key", "switch{"]
            for label in ("case 1:", "case 2:", "default:"):
                inner, itoks = self.block(depth + 1, self.rng.randint(0, 2))
                lines += [label] + ["    " + ln for ln in inner]
                toks += itoks
                if self.rng.random() < 0.5:
                    lines.append("    break;")
                    toks.append("break")
            lines.append("}")
            return lines, toks + ["}"]
        if kind == "try":
            t_in, t_toks = self.block(depth + 1)
            lines = ["try {"] + ["    " + ln for ln in t_in] + ["}"]
            toks = ["try{"] + t_toks + ["}"]
            for _ in range(self.rng.randint(0, 2)):
                c_in, c_toks = self.block(depth + 1)
                lines += ["catch (IOException | RuntimeException e) {"] + ["    " + ln for ln in c_in] + ["    e.printStackTrace();", "}"]
                toks += ["catch{"] + c_toks + ["IOException|RuntimeException.printStackTrace", "}"]
            if self.rng.random() < 0.5 or len(toks) == len(t_toks) + 2:
                f_in, f_toks = self.block(depth + 1)
                lines += ["finally {"] + ["    " + ln for ln in f_in] + ["}"]
                toks += ["finally{"] + f_toks + ["}"]
            return lines, toks
        if kind == "sync":
            lines, toks = self.body(depth, "synchronized (lock)")
            return lines, ["synchronized{"] + toks
        if kind == "anon":
            self.pending_anon.append(["inner", "if{", "hidden", "}", "}"])
            return [
                "Runnable r = new Runnable() {",
                "    public void run() {",
                "        inner();",
                "        if (x) hidden();",
                "    }",
                "};",
            ], []
        if kind == "lambda":
            self.lambdas += 1
            return ["Runnable q = () -> {", "    if (x) { skipped(); }", "};"], []
        inner, toks = self.block(depth + 1)
        return ["{"] + ["    " + ln for ln in inner] + ["}"], toks

    def _jump(self) -> tuple[list[str], list[str]]:
        word = self.rng.choice(["break", "continue"])
        label = self.rng.choice(["", " outer"])
        return [f"{word}{label};"], [word]

    # files -------------------------------------------------------------

    def file(self, index: int) -> GeneratedFile:
        cls = f"Gen{index}"
        out = GeneratedFile(f"pkg/{cls}.java", "")
        lines = [
            "package pkg;",
            "",
            "import java.util.*;",
            "",
            "/** Generated fixture; if { } in a javadoc. */",
            f"public class {cls} extends Base {{",
            "    private static final Logger log = Logger.getLogger(\"x\");",
            "    private Map<String, List<Integer>> cache = new HashMap<String, List<Integer>>();",
            "    private StringBuilder sb;",
            "",
        ]
        anon_counter = 0
        for j in range(self.rng.randint(1, 4)):
            self.pending_anon: list[list[str]] = []
            self.lambdas = 0
            body_lines, toks = self.block(0, self.rng.randint(1, 6))
            sig = f"void m{j}(String name, int[] nums)"
            lines.append("    @Override")
            lines.append(f"    public {sig}" + self.open_brace())
            prologue = [
                "List < String > items = new ArrayList<>();",
                "Iterator<String> it = items.iterator();",
                "Object obj = null;",
            ]
            lines += ["        " + ln for ln in prologue + body_lines]
            lines.append("    }")
            out.expected[f"{cls}::{sig}"] = ["List<String>.iterator"] + toks + ["}"]
            for anon_toks in self.pending_anon:
                anon_counter += 1
                out.expected[f"{cls}:Anon${anon_counter}:void run()"] = anon_toks
            out.lambda_bodies += self.lambdas
            lines.append("")
        lines.append("}")
        out.text = "\n".join(lines) + "\n"
        return out


def generate(count: int, seed: int = 0) -> list[GeneratedFile]:
    gen = JavaGen(random.Random(seed))
    return [gen.file(i) for i in range(count)]
