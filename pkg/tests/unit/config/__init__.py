"""Config module unit tests"""
