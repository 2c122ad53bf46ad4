#! python3.11

#    This module is a part of the ftpolytope package.
#
#    This program is libre software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
#    See the LICENSE file for more details.

'''
An implementation detail: coalesce common arguments amongst the subcommands and the scripts.
'''

########################################################################################################################

import argparse
from enum import Enum

from ._batch import DefaultConcurrency

__all__ = ['FTArgs']

########################################################################################################################

def _size_list(text:str) -> list[int]:
    try:
        sizes = [int(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers") from None
    if not sizes or any(n < 2 or n % 2 for n in sizes):
        raise argparse.ArgumentTypeError(f"sizes must be even and at least 2, got {text!r}")
    return sizes
_size_list.__name__ = "size list" # for argparse error messages

class FTArgs(Enum):
    '''
    A list of common arguments amongst the subcommands and scripts (can be used to automatically include them)
    '''
    Instance    = ('instance',), {'help': 'a file path, an inline list like "3,3,4,2", or - for stdin'}
    Json        = ('--json',), {'action': 'store_true', 'help': 'write the report as JSON to stdout'}
    Preprocess  = ('--preprocess',), {'nargs': '?', 'const': 'up', 'default': None, 'choices': ('up', 'down'),
                  'help': "make s_max odd before analyzing: add one to each element (up, the default when the flag "
                          "is given bare) or subtract one (down)"}
    Format      = ('--format',), {'default': 'ine', 'choices': ('ine', 'ext', 'json'),
                  'help': "export format: cdd H-representation, cdd V-representation, or JSON (default: %(default)s)"}
    Out         = ('-o', '--out'), {'default': None, 'help': 'file to write to (default: stdout)'}

    Count       = ('-n', '--count'), {'type': int, 'default': 100,
                  'help': 'number of random instances per size (default: %(default)s)'}
    Seed        = ('-s', '--seed'), {'type': int, 'default': 7, 'help': 'random seed (default: %(default)s)'}
    Sizes       = ('--sizes',), {'type': _size_list, 'default': [4, 6],
                  'help': 'comma-separated instance sizes 2m (default: 4,6)'}
    MaxValue    = ('--max-value',), {'type': int, 'default': 20,
                  'help': 'random elements are drawn from [1, max-value] (default: %(default)s)'}
    Planted     = ('--planted',), {'action': 'store_true',
                  'help': 'generate instances with a planted exact partition and a half-max element'}

    MaxDim      = ('--max-dim',), {'type': int, 'default': None,
                  'help': 'refuse to enumerate above this dimension 2m (default: $FT_MAX_DIM, else 16)'}
    Concurrency = ('-c', '--concurrency'), {'type': int, 'default': DefaultConcurrency,
                  'help': "number of worker threads for batch checks (default: %(default)s)"}
    Verbose     = ('-v', '--verbose'), {'action': 'store_true', 'help': 'log at DEBUG level'}

    def add_to_parser(self, parser, **_kwargs):
        '''
        Add argument `self` to the given parser, optionally overwriting kwargs.
        '''
        args, kwargs = self.value
        parser.add_argument(*args, **{**kwargs, **_kwargs})

    @staticmethod
    def add_args_to_parser(parser, *args):
        '''
        Given a sequence of members of this class, add each of them to the `parser`. (This is just a simple loop.)
        '''
        for arg in args:
            arg.add_to_parser(parser)
