import re

import pytest

from logeval.logmodel import (
    LogLevel,
    LoggerCallSpec,
    NotALogStatement,
    SourceUnit,
    UnbalancedDelimiters,
    UnknownLevel,
    code_tokens,
    find_log_statements,
    level_distance,
    parse_log_statement,
)


class TestLogLevel:
    def test_ordinals_are_fixed(self):
        assert [l.value for l in LogLevel] == [0, 1, 2, 3, 4, 5]
        assert LogLevel.TRACE == 0 and LogLevel.FATAL == 5

    def test_parse_is_case_insensitive(self):
        assert LogLevel.parse("WARN") is LogLevel.WARN
        assert LogLevel.parse("Info") is LogLevel.INFO
        assert LogLevel.parse(" fatal ") is LogLevel.FATAL

    def test_parse_rejects_other_names(self):
        for bad in ("warning", "notice", "critical", "", "inf o"):
            with pytest.raises(UnknownLevel):
                LogLevel.parse(bad)

    def test_distance_examples(self):
        assert level_distance(LogLevel.WARN, LogLevel.WARN) == 0
        assert level_distance(LogLevel.ERROR, LogLevel.WARN) == 1
        assert level_distance(LogLevel.FATAL, LogLevel.TRACE) == 5

    def test_distance_symmetric_zero_diagonal_max_five(self):
        levels = list(LogLevel)
        distances = [level_distance(a, b) for a in levels for b in levels]
        assert max(distances) == 5
        for a in levels:
            assert level_distance(a, a) == 0
            for b in levels:
                assert level_distance(a, b) == level_distance(b, a)


class TestParse:
    def test_ternary_is_one_semantic_unit(self):
        stmt = parse_log_statement(
            'log.info("The server run on the ports, {}", args.status ? localPort : remotePort)'
        )
        assert stmt.level is LogLevel.INFO
        assert stmt.static_text == "The server run on the ports, {}"
        assert stmt.dynamic_exprs == ("args.status ? localPort : remotePort",)

    def test_no_arguments_beyond_message(self):
        stmt = parse_log_statement('log.warn("startup")')
        assert stmt.level is LogLevel.WARN
        assert stmt.static_text == "startup"
        assert stmt.dynamic_exprs == ()

    def test_composite_stays_intact(self):
        stmt = parse_log_statement('log.error("x {} y {}", a, b+c)')
        assert stmt.dynamic_exprs == ("a", "b+c")

    def test_concatenation_decomposes_in_textual_order(self):
        stmt = parse_log_statement('log.debug("Evicting " + key + " after " + hits + " hits");')
        assert stmt.static_text == "Evicting {} after {} hits"
        assert stmt.dynamic_exprs == ("key", "hits")

    def test_multiline_call_spans_all_lines(self):
        text = 'this.log.warn(\n    "slot {} outlived grace of {} ms",\n    slotId,\n    graceMs);'
        stmt = parse_log_statement(text)
        assert stmt.receiver == "this.log"
        assert stmt.span == (1, 4)
        assert stmt.dynamic_exprs == ("slotId", "graceMs")

    def test_deterministic(self):
        text = 'LOGGER.error("commit {} failed on epoch {}", txId, epoch, cause);'
        assert parse_log_statement(text) == parse_log_statement(text)

    def test_rejects_non_logger_calls(self):
        for bad in (
            'list.add("x")',
            'log.isDebugEnabled()',
            'Logger.getLogger("x")',
            'log.info("x"); cleanup();',
            "int x = 1;",
        ):
            with pytest.raises(NotALogStatement):
                parse_log_statement(bad)

    def test_rejects_unbalanced(self):
        with pytest.raises(UnbalancedDelimiters):
            parse_log_statement('log.info("x {}", f(a, g(b)')
        with pytest.raises(UnbalancedDelimiters):
            parse_log_statement('log.info("never closed)')

    def test_custom_call_spec(self):
        spec = LoggerCallSpec(receiver_pattern=r"console", methods=("warn",))
        stmt = parse_log_statement('console.warn("disk almost full on {}", host)', spec)
        assert stmt.level is LogLevel.WARN
        with pytest.raises(NotALogStatement):
            parse_log_statement('log.warn("disk almost full on {}", host)', spec)


# Independent expression-splitter oracle: blanks out string literals with a
# regex, then splits on commas at bracket depth zero. Shares no code with the
# production scanner.
def oracle_split_args(args_text):
    masked = re.sub(r'"(?:\\.|[^"\\])*"', lambda m: "_" * len(m.group(0)), args_text)
    masked = re.sub(r"'(?:\\.|[^'\\])*'", lambda m: "_" * len(m.group(0)), masked)
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(masked):
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(args_text[start:i])
            start = i + 1
    parts.append(args_text[start:])
    return [p.strip() for p in parts]


CRAFTED_ARGS = [
    "a, b+c",
    "a, b + c * d",
    "flag ? x : y",
    "args.status ? localPort : remotePort",
    "user.getName(), order.total()",
    "map.get(key), list.size()",
    "compute(a, b), c",
    "nested(f(x, y), z), tail",
    "(a + b), (c - d)",
    "arr[i], arr[i + 1]",
    "obj.field, obj.method(arg1, arg2)",
    "x == null ? \"none\" : x.trim(), y",
    "String.valueOf(n), Integer.parseInt(s, 16)",
    "(long) total, (int) (ratio * 100)",
    "a, b, c",
    "new int[]{1, 2, 3}.length, k",
    "count + 1, limit - 1",
    "path.resolve(\"a, b\"), other",
    "fn.apply(x), gn.apply(y, z)",
    "outer(inner(deep(p, q)), r), s",
]


def test_expression_splitting_matches_independent_oracle():
    for args in CRAFTED_ARGS:
        stmt = parse_log_statement(f'log.error("probe {{}} values {{}} seen", {args})')
        expected = tuple(" ".join(p.split()) for p in oracle_split_args(args))
        assert stmt.dynamic_exprs == expected, args


class TestRender:
    CASES = [
        'log.info("Accepted crate of {} apples, running total {}", crate, total)',
        'log.warn("startup probe finished without listeners")',
        'LOGGER.fatal("giving up on {} after {} attempts", target, n);',
        'this.log.trace("advancing {} toward {}", rev, target);',
        'log.debug("Evicting " + key + " after " + hits + " hits");',
    ]

    def test_parse_render_round_trip_preserves_decomposition(self):
        for text in self.CASES:
            first = parse_log_statement(text)
            second = parse_log_statement(first.render())
            assert second.level is first.level
            assert second.static_text == first.static_text
            assert second.dynamic_exprs == first.dynamic_exprs
            assert second.receiver == first.receiver

    def test_render_matches_raw_for_placeholder_form(self):
        text = 'log.info("Accepted crate of {} apples, running total {}",  crate,   total);'
        stmt = parse_log_statement(text)
        normalize = lambda s: " ".join(s.split())
        assert normalize(stmt.render()) == normalize(text)


class TestFind:
    def test_skips_strings_and_comments(self):
        text = "\n".join(
            [
                "public class A {",
                "  void f() {",
                '    String s = "log.info(\\"ghost\\")";',
                "    // log.warn(\"commented out\")",
                "    /* log.error(\"blocked\") */",
                '    log.info("the only real statement {}", s);',
                "  }",
                "}",
            ]
        )
        matches = find_log_statements(text)
        assert len(matches) == 1
        assert matches[0].start_line == 6

    def test_statement_count_independent_of_units(self):
        # Three statements in one body yield three matches.
        text = "\n".join(
            [
                "void g() {",
                '  log.info("first message with four tokens");',
                '  log.warn("second message with four tokens");',
                '  log.error("third message with four tokens");',
                "}",
            ]
        )
        assert len(find_log_statements(text)) == 3


def test_source_unit_round_trip_and_token_count():
    text = 'int x = 1;\nlog.info("two plus two");\n'
    unit = SourceUnit.from_text("u", text)
    assert unit.text == text
    assert unit.token_count == len(code_tokens(text))
    crlf = SourceUnit.from_text("u", "a\r\nb\r\n")
    assert crlf.lines == ("a", "b", "")
