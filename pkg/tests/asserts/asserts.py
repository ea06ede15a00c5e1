def assert_passport(passport, over_0, over_1, over_inf):
    assert passport.partitions() == (tuple(over_0), tuple(over_1), tuple(over_inf))


def assert_counts(c, vertices, edges, faces):
    assert c.counts() == {'vertices': vertices, 'edges': edges, 'faces': faces}


def assert_euler(c, euler):
    assert c.euler == euler


def assert_all_pass(report, *check_ids):
    for check_id in check_ids:
        assert report[check_id].passed, report[check_id].witness


def assert_num_glyphs(figures, *args):
    for idx, num in enumerate(args):
        assert figures[idx].glyph_count == num


def assert_close(a, b, tol=1e-9):
    assert abs(complex(a) - complex(b)) < tol, f'{a} != {b}'
