# -*- coding: utf-8 -*-

name = 'verspec'

version = '0.1.0'

requires = [
    "logzero",
    "codetiming",
    "typing_extensions"
]

description = "Relative Verdier specialization checks"


def commands():
    env.PYTHONPATH.append('{root}')
    env.PYTHONPATH.append('{root}/verspec_q7_conf')


is_pure_python = True
