"""Shared module unit tests"""
