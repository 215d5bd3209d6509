"""Test cases for configuration files."""
import argparse
import os
import tempfile
from unittest import TestCase
from ..app.config import apply_config
from ..app.config import load_config


def write_config(directory, text):
    """Write a configuration file and return its path."""
    path = os.path.join(directory, 'weier4.cfg')
    with open(path, 'w') as stream:
        stream.write(text)
    return path


def parser():
    parser = argparse.ArgumentParser()
    parser.add_argument('--grid-v', type=str)
    parser.add_argument('--order', type=int, default=24)
    parser.add_argument('--verbose', action='store_true')
    return parser


class ShouldLoadConfig(TestCase):
    def test(self):
        with tempfile.TemporaryDirectory() as directory:
            path = write_config(directory, '# defaults\n\n--grid-v = -0.1:0.1\norder=12\n')
            config = load_config(path)
        self.assertEqual({'grid_v': '-0.1:0.1', 'order': '12'}, config)

    def test_malformed(self):
        with tempfile.TemporaryDirectory() as directory:
            path = write_config(directory, 'order 12\n')
            with self.assertRaises(ValueError):
                load_config(path)


class ShouldApplyConfig(TestCase):
    def test_defaults(self):
        p = parser()
        apply_config(p, {'order': '12', 'verbose': 'yes', 'grid_v': '-1:1'})
        args = p.parse_args([])
        self.assertEqual(12, args.order)
        self.assertTrue(args.verbose)
        self.assertEqual('-1:1', args.grid_v)

    def test_command_line_wins(self):
        p = parser()
        apply_config(p, {'order': '12'})
        self.assertEqual(30, p.parse_args(['--order', '30']).order)

    def test_unknown_key(self):
        p = parser()
        with self.assertLogs('weier4.app.config', level='WARNING'):
            apply_config(p, {'colour': 'red'})

    def test_bad_switch(self):
        with self.assertRaises(ValueError):
            apply_config(parser(), {'verbose': 'maybe'})
