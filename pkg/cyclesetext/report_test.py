from cyclesetext.report import CheckReport


class TestCheckReport:

    def test_ledger(self):
        report = CheckReport('toy')
        report.add('first', 'a = a', None)
        assert report.passed
        report.add('second', 'a + b = b + a', (1, 2))
        report.add('third', 'a = b', (0, 1))
        assert not report.passed
        assert report.first_failure().name == 'second'
        assert [r.name for r in report.failures()] == ['second', 'third']
        assert report['second'].witness == (1, 2)
        assert 'third' in report
        assert 'fourth' not in report

    def test_serialization(self):
        report = CheckReport('toy')
        report.add('ok', 'x = x', None)
        report.add('bad', 'x = y', ((1, 0), 2))
        assert report.to_dict() == [
            {'identity': 'ok', 'formula': 'x = x', 'status': 'pass',
             'witness': None},
            {'identity': 'bad', 'formula': 'x = y', 'status': 'fail',
             'witness': [[1, 0], 2]},
        ]
        frame = report.to_frame()
        assert list(frame['status']) == ['pass', 'fail']
        assert list(frame.columns) == ['identity', 'status', 'witness',
                                       'formula']
