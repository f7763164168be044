"""Backend unit tests"""
