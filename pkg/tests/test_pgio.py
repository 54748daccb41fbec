# -*- coding: utf-8 -*-
"""Unit tests for the PGSolver formats and the game generators"""

import pytest
from src.parigrade.errors import MalformedInput, PgSyntaxError
from src.parigrade.models import GeneratorSpec, Player, SolutionDocument
from src.parigrade.pgio import emit_pgsolver, emit_solution, gen_random, gen_ring, generate, \
    load_game, parse_pgsolver, parse_solution
from tests.helpers.games import RING_TWO_SOLUTION, RING_TWO_TEXT, get_malformed_cases


class TestParsePgsolver:
    def test_ring_text(self, ring_two):
        arena = parse_pgsolver(RING_TWO_TEXT)

        assert arena == ring_two
        assert arena.original_ids == (1, 2, 3, 4)

    def test_header_is_optional_and_records_share_lines(self):
        arena = parse_pgsolver('0 2 0 0,1 "start"; 1 1 1 0;')

        assert arena.n == 2
        assert arena.vertices[0].name == 'start'
        assert arena.owner(1) is Player.ODD
        assert arena.successors == ((0, 1), (0,))

    def test_records_may_span_lines(self):
        arena = parse_pgsolver('parity 1;\n0\n2 0\n0,\n1;\n1 3 1 1;\n')

        assert arena.successors == ((0, 1), (1,))
        assert arena.colour(1) == 3

    @pytest.mark.parametrize('case', get_malformed_cases(
        ['bad-priority', 'owner-out-of-range', 'missing-semicolon', 'id-above-header',
         'unterminated-name', 'dangling-edge', 'duplicate-id']))
    def test_malformed(self, case):
        text, error_type, position = case

        with pytest.raises(error_type) as error:
            parse_pgsolver(text)

        if position is not None:
            assert (error.value.line, error.value.column) == position

    def test_error_message_names_the_position(self):
        with pytest.raises(PgSyntaxError, match="1:3: expected priority, found 'x'"):
            parse_pgsolver('0 x 0 0;')

    @pytest.mark.parametrize('digit', ['²', '٣'])
    def test_only_ascii_digits_are_numbers(self, digit):
        with pytest.raises(PgSyntaxError, match='1:3: expected priority'):
            parse_pgsolver('0 {} 0 0;'.format(digit))

    def test_load_game(self, write_file, ring_two):
        assert load_game(write_file(RING_TWO_TEXT)) == ring_two


class TestEmitPgsolver:
    def test_ring(self, ring_two):
        assert emit_pgsolver(ring_two) == RING_TWO_TEXT

    def test_names_and_sparse_ids_survive(self):
        text = 'parity 9;\n4 1 1 4,9;\n9 2 0 4 "top";\n'

        assert emit_pgsolver(parse_pgsolver(text)) == text

    def test_records_and_successors_come_out_in_id_order(self):
        arena = parse_pgsolver('parity 9;\n9 2 0 3,9;\n3 1 1 9;\n')

        assert arena.original_ids == (9, 3)
        assert emit_pgsolver(arena) == 'parity 9;\n3 1 1 9;\n9 2 0 3,9;\n'

    def test_emitting_normalises(self):
        text = emit_pgsolver(parse_pgsolver('7 2 0 7,2 "x";\n2 1 1 7;\n'))

        assert emit_pgsolver(parse_pgsolver(text)) == text
        assert text == 'parity 7;\n2 1 1 7;\n7 2 0 2,7 "x";\n'


class TestGenerators:
    def test_ring_matches_the_four_vertex_example(self, ring_two):
        assert ring_two.n == 4
        assert all(vertex.owner is Player.ODD for vertex in ring_two.vertices)
        assert [ring_two.colour(vertex) for vertex in range(4)] == [1, 2, 3, 4]
        assert ring_two.successors == ((1,), (0, 2), (3,), (0,))

    def test_ring_rejects_empty(self):
        with pytest.raises(ValueError, match='n must be at least 1'):
            gen_ring(0)

    def test_random_is_a_function_of_its_spec(self):
        spec = GeneratorSpec.random(40, 1, 4, 6, 11)

        first = gen_random(spec)

        assert first == gen_random(spec)
        assert emit_pgsolver(first) == emit_pgsolver(generate(spec))

    def test_random_respects_its_bounds(self):
        arena = gen_random(GeneratorSpec.random(100, 2, 5, 6, 7))

        assert arena.n == 100
        assert arena.original_ids == tuple(range(100))
        assert all(2 <= len(successors) <= 5 for successors in arena.successors)
        assert all(1 <= arena.colour(vertex) <= 6 for vertex in range(arena.n))

    def test_random_round_trips_through_text(self):
        arena = gen_random(GeneratorSpec.random(100, 1, 6, 6, 7))

        assert parse_pgsolver(emit_pgsolver(arena)) == arena

    def test_generate_ring(self, ring_two):
        assert generate(GeneratorSpec.ring(2)) == ring_two


class TestSolutionFormat:
    def test_emit(self, ring_two):
        document = SolutionDocument([Player.EVEN] * 4, original_ids=ring_two.original_ids)

        assert emit_solution(document) == RING_TWO_SOLUTION

    def test_emit_orders_by_original_id(self):
        document = SolutionDocument([Player.ODD, Player.EVEN], [1, None], original_ids=[8, 3])

        assert emit_solution(document) == 'paritysol 8;\n3 0;\n8 1 3;\n'

    def test_parse(self, ring_two):
        document = parse_solution('paritysol 4;\n1 0; 2 1 1;\n3 0;\n4 0;\n', ring_two)

        assert document.winners == [Player.EVEN, Player.ODD, Player.EVEN, Player.EVEN]
        assert document.strategy == [None, 0, None, None]

    @pytest.mark.parametrize('text, message', [
        ('paritysol 4;\n1 0;\n2 0;\n3 0;\n', 'no winner for vertices \\[4\\]'),
        ('paritysol 4;\n1 0;\n1 0;\n2 0;\n3 0;\n4 0;\n', 'listed twice'),
        ('paritysol 9;\n9 0;\n', 'unknown vertex 9'),
        ('paritysol 4;\n1 0 7;\n', 'strategy of 1 names unknown vertex 7')
    ])
    def test_parse_malformed(self, ring_two, text, message):
        with pytest.raises(MalformedInput, match=message):
            parse_solution(text, ring_two)

    def test_parse_bad_winner(self, ring_two):
        with pytest.raises(PgSyntaxError, match='winner 0 or 1'):
            parse_solution('paritysol 4;\n1 2;\n', ring_two)
