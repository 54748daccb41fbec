# -*- coding: utf-8 -*-
"""Source directory containing parigrade"""
