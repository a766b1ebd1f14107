#!/usr/bin/env python


__version__ = 'v0.1.0'
