from ncbgg.workbench.Reports import cohomology_text, format_table, records_text, render
from tests.ExtendedTestCase import ExtendedTestCase


class TestReports(ExtendedTestCase):

    def test_format_table(self):
        text = format_table(['a', 'bb'], [[1, None], [10, 2]])
        self.assertEqual(text, ' a  bb\n--  --\n 1   -\n10   2')

    def test_cohomology_text(self):
        self.assertEqual(cohomology_text({0: {0: 1, 1: 2}}, title='h'), 'h\npos  0  1\n---  -  -\n  0  1  2')
        self.assertEqual(cohomology_text({}, title='h'), 'h\n(zero)')

    def test_records_text(self):
        self.assertEqual(records_text([], title='rows'), 'rows\n(none)')
        self.assertEqual(records_text([{'i': 0, 'ok': True}]), 'i    ok\n-  ----\n0  True')

    def test_render(self):
        text = render({'size': 3, 'identity': [{'i': 0, 'ok': True}], 'phi_cohomology': {'0': {'1': 2}}})
        self.assertTrue(text.startswith(' key  value\n'))
        self.assertIn('size      3', text)
        self.assertIn('identity\ni    ok', text)
        self.assertIn('phi_cohomology\npos  1', text)
        self.assertTrue(text.endswith('\n'))
